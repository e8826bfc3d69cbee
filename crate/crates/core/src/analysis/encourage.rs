//! Does a solution function make every player (weakly) prefer the grand
//! coalition to every sub-coalition?

use crate::coalition::{Coalition, PlayerId};
use crate::error::{GameError, Result};
use crate::game::TuGame;
use crate::predicates::is_convex;
use crate::scalar::Scalar;
use crate::solutions::{solve, solve_subgames, SolutionMethod};

/// Player `player` gets strictly more in the subgame on `coalition` than in
/// the full game.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncouragementViolation<S> {
    pub player: PlayerId,
    pub coalition: Coalition,
    pub grand_payoff: S,
    pub sub_payoff: S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EncouragementReport<S> {
    pub encourages: bool,
    /// Ordered by coalition mask, then player id.
    pub violations: Vec<EncouragementViolation<S>>,
}

/// Compares `f^v_i` with `f^{v_A}_i` for every nonempty `A` and every `i ∈ A`.
pub fn encourages_on<S: Scalar>(game: &TuGame<S>, method: SolutionMethod) -> Result<EncouragementReport<S>> {
    if let Some(witness) = is_convex(game).witness {
        return Err(GameError::ConvexityViolation(witness.to_string()));
    }
    let grand = solve(game, method)?;
    let mut violations = Vec::new();
    for (coalition, sub) in solve_subgames(game, method)? {
        for (player, sub_payoff) in sub.iter() {
            let grand_payoff = grand.payoff(player);
            if grand_payoff < sub_payoff {
                violations.push(EncouragementViolation {
                    player,
                    coalition,
                    grand_payoff: grand_payoff.clone(),
                    sub_payoff: sub_payoff.clone(),
                });
            }
        }
    }
    Ok(EncouragementReport { encourages: violations.is_empty(), violations })
}
