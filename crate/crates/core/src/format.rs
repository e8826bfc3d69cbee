//! The `.tug` text format and the allocation argument syntax.
//!
//! ```text
//! # comments run to end of line
//! players 3
//! v 1 = 0
//! v 1 2 = 3/2
//! v 3 2 1 = 5
//! ```
//!
//! The header comes first; then every nonempty coalition of `{1, ..., n}`
//! gets exactly one `v <ids> = <value>` line, in any order. Values are
//! integers or `p/q`. `;` may stand in for a line break.

use std::fmt::Write as _;

use crate::coalition::{Coalition, PlayerId, MAX_PLAYERS};
use crate::error::{GameError, Result};
use crate::game::{Allocation, TuGame};
use crate::scalar::Scalar;

fn parse_error(line: usize, message: impl Into<String>) -> GameError {
    GameError::Parse { line, message: message.into() }
}

pub fn parse_game<S: Scalar>(text: &str) -> Result<TuGame<S>> {
    let mut n: Option<usize> = None;
    let mut values: Vec<Option<S>> = Vec::new();
    let mut last_line = 0;

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("");
        for statement in content.split(';').map(str::trim).filter(|s| !s.is_empty()) {
            let mut words = statement.split_whitespace();
            match words.next() {
                Some("players") => {
                    if n.is_some() {
                        return Err(parse_error(line, "duplicate players line"));
                    }
                    let count = words
                        .next()
                        .and_then(|w| w.parse::<usize>().ok())
                        .filter(|&k| (1..=MAX_PLAYERS).contains(&k))
                        .ok_or_else(|| parse_error(line, format!("expected `players <1..={MAX_PLAYERS}>`")))?;
                    if words.next().is_some() {
                        return Err(parse_error(line, "trailing input after player count"));
                    }
                    n = Some(count);
                    values = vec![None; 1 << count];
                }
                Some("v") => {
                    let n = n.ok_or_else(|| parse_error(line, "`players` line must come first"))?;
                    let rest = statement[1..].trim_start();
                    let (ids, value) = rest
                        .split_once('=')
                        .ok_or_else(|| parse_error(line, "expected `v <ids> = <value>`"))?;
                    let coalition = parse_coalition(ids, n, line)?;
                    let value = S::parse_literal(value)
                        .ok_or_else(|| parse_error(line, format!("malformed rational {:?}", value.trim())))?;
                    let slot = &mut values[coalition.mask() as usize];
                    if slot.is_some() {
                        return Err(parse_error(line, format!("duplicate coalition {coalition}")));
                    }
                    *slot = Some(value);
                }
                Some(other) => return Err(parse_error(line, format!("unknown directive {other:?}"))),
                None => {}
            }
        }
    }

    let n = n.ok_or_else(|| parse_error(last_line.max(1), "missing `players` line"))?;
    let mut resolved = Vec::with_capacity(values.len());
    resolved.push(S::zero());
    for (mask, value) in values.into_iter().enumerate().skip(1) {
        let value = value.ok_or_else(|| {
            parse_error(last_line, format!("missing coalition {}", Coalition::from_mask(mask as u32)))
        })?;
        resolved.push(value);
    }
    TuGame::from_values(n, resolved)
}

fn parse_coalition(ids: &str, n: usize, line: usize) -> Result<Coalition> {
    let mut coalition = Coalition::EMPTY;
    for word in ids.split_whitespace() {
        let id: usize = word.parse().map_err(|_| parse_error(line, format!("bad player id {word:?}")))?;
        if !(1..=n).contains(&id) {
            return Err(parse_error(line, format!("player {id} out of range 1..={n}")));
        }
        let player = PlayerId::new(id)?;
        if coalition.contains(player) {
            return Err(parse_error(line, format!("player {id} repeated")));
        }
        coalition = coalition.with(player);
    }
    if coalition.is_empty() {
        return Err(parse_error(line, "the empty coalition is implicit (value 0)"));
    }
    Ok(coalition)
}

/// Serializes a game whose carrier is `{1, ..., n}`, one line per nonempty
/// coalition in ascending mask order.
pub fn write_game<S: Scalar>(game: &TuGame<S>) -> Result<String> {
    let carrier = game.carrier();
    let n = carrier.len();
    if carrier != Coalition::grand(n) {
        return Err(GameError::OutsideCarrier { coalition: carrier, carrier: Coalition::grand(n) });
    }
    let mut out = format!("players {n}\n");
    for (a, v) in game.iter().skip(1) {
        let ids: Vec<String> = a.players().map(|p| p.to_string()).collect();
        writeln!(out, "v {} = {v}", ids.join(" ")).expect("writing to a String");
    }
    Ok(out)
}

/// Parses `1=5/3,2=5/3,3=5/3,4=1`.
pub fn parse_allocation<S: Scalar>(text: &str) -> Result<Allocation<S>> {
    let bad = |message: String| parse_error(1, message);
    let pairs = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|entry| {
            let (id, value) = entry.split_once('=').ok_or_else(|| bad(format!("expected `id=value`, got {entry:?}")))?;
            let id: usize = id.trim().parse().map_err(|_| bad(format!("bad player id {:?}", id.trim())))?;
            let player = PlayerId::new(id)?;
            let value = S::parse_literal(value).ok_or_else(|| bad(format!("malformed rational {:?}", value.trim())))?;
            Ok((player, value))
        })
        .collect::<Result<Vec<_>>>()?;
    if pairs.is_empty() {
        return Err(bad("empty allocation".into()));
    }
    Allocation::from_pairs(pairs)
}

/// Inverse of [`parse_allocation`].
pub fn format_allocation<S: Scalar>(x: &Allocation<S>) -> String {
    x.iter().map(|(p, v)| format!("{p}={v}")).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::Rational;
    use proptest::prelude::*;

    fn parse(text: &str) -> Result<TuGame<Rational>> {
        parse_game(text)
    }

    fn line_of(err: GameError) -> usize {
        match err {
            GameError::Parse { line, .. } => line,
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn one_player_inline() {
        let g = parse("players 1 ; v 1 = 0").unwrap();
        assert_eq!(g, TuGame::zero(1).unwrap());
    }

    #[test]
    fn fractions_and_unordered_ids() {
        let g = parse("players 2\n# pairs\nv 2 1 = 3/2\nv 2 = -1\nv 1 = 6/4 # reduced\n").unwrap();
        let both = Coalition::from_ids([1, 2]).unwrap();
        assert_eq!(g.value(both).unwrap(), &Rational::from_frac(3, 2));
        assert_eq!(g.value(Coalition::from_ids([1]).unwrap()).unwrap().to_string(), "3/2");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(line_of(parse("players 2\nv 1 = 1\nv 1 = 2\nv 2 = 0\nv 1 2 = 1").unwrap_err()), 3);
        assert_eq!(line_of(parse("players 2\nv 1 = 1\nv 2 = 0").unwrap_err()), 3);
        assert_eq!(line_of(parse("players 2\nv 1 = 1\nv 2 = x\nv 1 2 = 1").unwrap_err()), 3);
        assert_eq!(line_of(parse("players 2\nv 1 = 1/0\nv 2 = 0\nv 1 2 = 1").unwrap_err()), 2);
        assert_eq!(line_of(parse("players 2\nv 1 = 1\nv 2 = 0\nv 1 3 = 1").unwrap_err()), 4);
        assert_eq!(line_of(parse("v 1 = 1\nplayers 1").unwrap_err()), 1);
        assert_eq!(line_of(parse("players 1\nplayers 1").unwrap_err()), 2);
        assert_eq!(line_of(parse("players 17").unwrap_err()), 1);
        assert_eq!(line_of(parse("players 2\nv 1 1 = 1").unwrap_err()), 2);
        assert_eq!(line_of(parse("players 1\nv = 0").unwrap_err()), 2);
        assert_eq!(line_of(parse("players 1\nw 1 = 0").unwrap_err()), 2);
        assert_eq!(line_of(parse("# nothing\n").unwrap_err()), 1);
    }

    #[test]
    fn shipped_fixtures_match_the_builders() {
        let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/");
        let load = |name: &str| parse(&std::fs::read_to_string(format!("{dir}{name}")).unwrap()).unwrap();
        assert_eq!(load("fixture_table1.tug"), fixtures::table1());
        assert_eq!(load("fixture_superadditive_nonconvex.tug"), fixtures::superadditive_nonconvex());
        assert_eq!(load("fixture_empty_core3.tug"), fixtures::empty_core3());
        assert_eq!(load("fixture_broken_triangle.tug"), fixtures::broken_triangle());
        let sub = load("fixture_table1_sub123.tug");
        assert_eq!(sub.iter().collect::<Vec<_>>(), fixtures::table1_restricted::<Rational>(&[1, 2, 3]).iter().collect::<Vec<_>>());
    }

    #[test]
    fn subgames_on_sparse_carriers_are_not_writable() {
        let sub = fixtures::table1::<Rational>().subgame(Coalition::from_ids([2, 4]).unwrap()).unwrap();
        assert!(write_game(&sub).is_err());
    }

    #[test]
    fn allocation_syntax() {
        let x: Allocation<Rational> = parse_allocation("1=5/3,2=5/3, 3=5/3,4=1").unwrap();
        assert_eq!(x.to_string(), "1=5/3 2=5/3 3=5/3 4=1");
        assert_eq!(format_allocation(&x), "1=5/3,2=5/3,3=5/3,4=1");
        assert!(parse_allocation::<Rational>("1=2,1=3").is_err());
        assert!(parse_allocation::<Rational>("1:2").is_err());
        assert!(parse_allocation::<Rational>("").is_err());
        assert!(parse_allocation::<Rational>("0=1").is_err());
    }

    proptest! {
        #[test]
        fn write_then_parse_is_identity(
            n in 1usize..=5,
            raw in proptest::collection::vec((-50i64..50, 1i64..12), 32),
        ) {
            let g = TuGame::from_fn(n, |a| {
                let (p, q) = raw[a.mask() as usize];
                Rational::from_frac(p, q)
            }).unwrap();
            let text = write_game(&g).unwrap();
            let back = parse(&text).unwrap();
            prop_assert_eq!(&back, &g);
            prop_assert_eq!(write_game(&back).unwrap(), text);
        }
    }
}
