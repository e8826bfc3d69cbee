//! Seeded random games for property suites.
//!
//! Every generator draws from `ChaCha8Rng::seed_from_u64(seed)` (rand_chacha
//! 0.3, rand 0.8 `gen_range` / `gen_bool`), visiting coalitions in ascending
//! mask order, so a configuration always yields the same game.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coalition::Coalition;
use crate::error::{GameError, Result};
use crate::game::TuGame;
use crate::predicates::{is_convex, is_superadditive};
use crate::scalar::Scalar;

pub const REJECTION_ATTEMPTS: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneratorMode {
    /// Nonnegative Harsanyi dividends; always convex.
    Dividends,
    /// Size-sorted uniform values, resampled until convex (`n ≤ 4`).
    Rejection,
    /// Super-additive 3-player games, convex or not.
    Superadditive3p,
    /// Independent uniform values with no structure.
    Uniform,
}

impl fmt::Display for GeneratorMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GeneratorMode::Dividends => "dividends",
            GeneratorMode::Rejection => "rejection",
            GeneratorMode::Superadditive3p => "superadditive3p",
            GeneratorMode::Uniform => "uniform",
        })
    }
}

impl FromStr for GeneratorMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dividends" => Ok(GeneratorMode::Dividends),
            "rejection" => Ok(GeneratorMode::Rejection),
            "superadditive3p" => Ok(GeneratorMode::Superadditive3p),
            "uniform" => Ok(GeneratorMode::Uniform),
            other => Err(format!(
                "unknown mode {other:?} (expected dividends, rejection, superadditive3p or uniform)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GeneratorConfig {
    pub n: usize,
    pub seed: u64,
    /// Upper bound for every integer draw.
    pub dividend_max: u32,
    pub mode: GeneratorMode,
}

impl GeneratorConfig {
    pub fn new(mode: GeneratorMode, n: usize, seed: u64) -> Self {
        GeneratorConfig { n, seed, dividend_max: 5, mode }
    }

    pub fn with_max(mut self, dividend_max: u32) -> Self {
        self.dividend_max = dividend_max;
        self
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(GameError::InvalidConfig(msg));
        if !(2..=8).contains(&self.n) {
            return bad(format!("n must be in 2..=8, got {}", self.n));
        }
        if self.dividend_max == 0 {
            return bad("dividend_max must be positive".into());
        }
        match self.mode {
            GeneratorMode::Rejection if self.n > 4 => bad(format!("rejection mode needs n <= 4, got {}", self.n)),
            GeneratorMode::Superadditive3p if self.n != 3 => bad(format!("superadditive3p needs n = 3, got {}", self.n)),
            _ => Ok(()),
        }
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }
}

/// Runs the generator selected by `config.mode`.
pub fn generate<S: Scalar>(config: &GeneratorConfig) -> Result<TuGame<S>> {
    match config.mode {
        GeneratorMode::Dividends => gen_convex_dividends(config),
        GeneratorMode::Rejection => gen_rejection(config),
        GeneratorMode::Superadditive3p => gen_superadditive_3p(config),
        GeneratorMode::Uniform => gen_uniform(config),
    }
}

/// `v(A) = Σ_{B⊆A} d_B` from dividends indexed by coalition mask.
pub fn game_from_dividends<S: Scalar>(n: usize, dividends: &[S]) -> Result<TuGame<S>> {
    if dividends.len() != 1 << n {
        return Err(GameError::ValueCount { expected: 1 << n, found: dividends.len() });
    }
    TuGame::from_fn(n, |a| a.nonempty_subsets().fold(S::zero(), |acc, b| acc + dividends[b.mask() as usize].clone()))
}

/// The unique `d_B` with `v(A) = Σ_{B⊆A} d_B`, indexed by rank within the
/// carrier.
pub fn harsanyi_dividends<S: Scalar>(game: &TuGame<S>) -> Vec<S> {
    game.carrier()
        .subsets()
        .map(|a| {
            a.subsets().fold(S::zero(), |acc, b| {
                let term = game.v(b).clone();
                if (a.len() - b.len()) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

pub fn gen_convex_dividends<S: Scalar>(config: &GeneratorConfig) -> Result<TuGame<S>> {
    config.validate()?;
    let mut rng = config.rng();
    let max = config.dividend_max;
    let dividends: Vec<S> = Coalition::grand(config.n)
        .subsets()
        .map(|b| match b.len() {
            0 => S::zero(),
            1 => S::from_i64(rng.gen_range(0..=max).into()),
            // Sparse: half of the multi-player dividends vanish.
            _ if rng.gen_bool(0.5) => S::zero(),
            _ => S::from_i64(rng.gen_range(1..=max).into()),
        })
        .collect();
    let game = game_from_dividends(config.n, &dividends)?;
    assert!(is_convex(&game).passed(), "nonnegative dividends must give a convex game");
    Ok(game)
}

pub fn gen_rejection<S: Scalar>(config: &GeneratorConfig) -> Result<TuGame<S>> {
    config.validate()?;
    let mut rng = config.rng();
    let grand = Coalition::grand(config.n);
    let mut by_size: Vec<Coalition> = grand.nonempty_subsets().collect();
    by_size.sort_by_key(|a| (a.len(), a.mask()));
    let mut draws = vec![0i64; by_size.len()];
    let mut slots = vec![0i64; 1 << config.n];
    for _ in 0..REJECTION_ATTEMPTS {
        for d in &mut draws {
            *d = rng.gen_range(0..=config.dividend_max).into();
        }
        draws.sort_unstable();
        for (a, &d) in by_size.iter().zip(&draws) {
            slots[a.mask() as usize] = d;
        }
        let game = TuGame::from_fn(config.n, |a| S::from_i64(slots[a.mask() as usize]))?;
        if is_convex(&game).passed() {
            return Ok(game);
        }
    }
    Err(GameError::GeneratorExhausted { attempts: REJECTION_ATTEMPTS })
}

/// Draws singleton values, pair surpluses `M_ij ≥ 0` and a grand surplus
/// `S ≥ max M_ij`, which is exactly super-additivity for three players.
pub fn gen_superadditive_3p<S: Scalar>(config: &GeneratorConfig) -> Result<TuGame<S>> {
    config.validate()?;
    let mut rng = config.rng();
    let max = config.dividend_max;
    let mut draw = |lo: u32| -> i64 { rng.gen_range(lo..=max).into() };
    let singles = [draw(0), draw(0), draw(0)];
    let pairs = [draw(0), draw(0), draw(0)];
    let surplus = pairs.iter().copied().max().unwrap_or(0) + draw(0);
    let game = TuGame::from_fn(3, |a| {
        let base: i64 = a.players().map(|p| singles[p.get() - 1]).sum();
        S::from_i64(match a.mask() {
            0b011 => base + pairs[0],
            0b101 => base + pairs[1],
            0b110 => base + pairs[2],
            0b111 => base + surplus,
            _ => base,
        })
    })?;
    assert!(is_superadditive(&game).passed(), "surplus construction must be super-additive");
    Ok(game)
}

/// Independent uniform values in `0..=dividend_max`.
pub fn gen_uniform<S: Scalar>(config: &GeneratorConfig) -> Result<TuGame<S>> {
    config.validate()?;
    let mut rng = config.rng();
    TuGame::from_fn(config.n, |_| S::from_i64(rng.gen_range(0..=config.dividend_max).into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{is_convex_with, ConvexityCheck};
    use crate::{Rational, Rational64};

    #[test]
    fn same_config_same_game() {
        for mode in [GeneratorMode::Dividends, GeneratorMode::Rejection, GeneratorMode::Uniform] {
            let config = GeneratorConfig::new(mode, 3, 42);
            assert_eq!(generate::<Rational>(&config).unwrap(), generate::<Rational>(&config).unwrap());
        }
        let config = GeneratorConfig::new(GeneratorMode::Superadditive3p, 3, 7);
        assert_eq!(generate::<Rational>(&config).unwrap(), generate::<Rational>(&config).unwrap());
    }

    #[test]
    fn seed_changes_the_game() {
        let a = generate::<Rational>(&GeneratorConfig::new(GeneratorMode::Dividends, 4, 1)).unwrap();
        let b = generate::<Rational>(&GeneratorConfig::new(GeneratorMode::Dividends, 4, 2)).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn scalar_type_does_not_change_values() {
        let config = GeneratorConfig::new(GeneratorMode::Dividends, 5, 9);
        let big = generate::<Rational>(&config).unwrap();
        let small = generate::<Rational64>(&config).unwrap();
        for ((a, x), (b, y)) in big.iter().zip(small.iter()) {
            assert_eq!(a, b);
            assert_eq!(x.to_string(), y.to_string());
        }
    }

    #[test]
    fn seed_42_dividend_game_is_convex() {
        let g = generate::<Rational>(&GeneratorConfig::new(GeneratorMode::Dividends, 4, 42)).unwrap();
        assert!(is_convex_with(&g, ConvexityCheck::CrossChecked).passed());
    }

    #[test]
    fn dividend_edge_cases() {
        let zeros = vec![Rational::from_i64(0); 8];
        let g = game_from_dividends(3, &zeros).unwrap();
        assert_eq!(g, TuGame::zero(3).unwrap());
        assert!(is_convex(&g).passed());

        let mut unanimity = zeros;
        unanimity[0b111] = Rational::from_i64(1);
        let g = game_from_dividends(3, &unanimity).unwrap();
        for (a, v) in g.iter() {
            assert_eq!(*v, Rational::from_i64(i64::from(a.len() == 3)));
        }
        assert!(is_convex_with(&g, ConvexityCheck::CrossChecked).passed());
        assert_eq!(harsanyi_dividends(&g), unanimity);
    }

    #[test]
    fn dividends_round_trip() {
        let g = generate::<Rational>(&GeneratorConfig::new(GeneratorMode::Uniform, 4, 3)).unwrap();
        let d = harsanyi_dividends(&g);
        assert_eq!(game_from_dividends(4, &d).unwrap(), g);
    }

    #[test]
    fn invalid_configs() {
        let bad = [
            GeneratorConfig::new(GeneratorMode::Dividends, 1, 0),
            GeneratorConfig::new(GeneratorMode::Dividends, 9, 0),
            GeneratorConfig::new(GeneratorMode::Rejection, 5, 0),
            GeneratorConfig::new(GeneratorMode::Superadditive3p, 4, 0),
            GeneratorConfig::new(GeneratorMode::Dividends, 3, 0).with_max(0),
        ];
        for config in bad {
            assert!(matches!(generate::<Rational>(&config), Err(GameError::InvalidConfig(_))), "{config:?}");
        }
    }

    #[test]
    fn modes_round_trip_through_strings() {
        for mode in [GeneratorMode::Dividends, GeneratorMode::Rejection, GeneratorMode::Superadditive3p, GeneratorMode::Uniform] {
            assert_eq!(mode.to_string().parse::<GeneratorMode>(), Ok(mode));
        }
    }
}
