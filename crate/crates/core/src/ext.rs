//! The rationals extended with a bottom (`bot`, negative infinity) and a
//! top (`top`, positive infinity) element.
//!
//! `bot` is stronger than `top` in every operation: `bot + top = bot` and,
//! unusually, `0 • bot = bot` while `0 • top = 0`. The scalar action only
//! takes nonnegative weights; a general product of two extended values is
//! never defined. The order is total with `bot < q < top` for every
//! rational `q`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::mat::Mat;
use crate::rat::{NNRat, Rat};

/// Extended value: `Bot`, a finite rational, or `Top`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Ext {
    Bot,
    Fin(Rat),
    Top,
}

#[derive(Debug, Error)]
#[error("invalid extended literal {literal:?}")]
pub struct ParseExtError {
    pub literal: String,
}

impl Ext {
    pub fn zero() -> Ext {
        Ext::Fin(Rat::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Fin(_))
    }

    pub fn as_fin(&self) -> Option<&Rat> {
        match self {
            Ext::Fin(q) => Some(q),
            _ => None,
        }
    }

    /// Addition table: `bot` absorbs from either side, then `top` absorbs,
    /// otherwise the finite sum.
    pub fn add(&self, other: &Ext) -> Ext {
        match (self, other) {
            (Ext::Bot, _) | (_, Ext::Bot) => Ext::Bot,
            (Ext::Top, _) | (_, Ext::Top) => Ext::Top,
            (Ext::Fin(a), Ext::Fin(b)) => Ext::Fin(a + b),
        }
    }

    /// Negation swaps `bot` and `top`.
    pub fn neg(&self) -> Ext {
        match self {
            Ext::Bot => Ext::Top,
            Ext::Top => Ext::Bot,
            Ext::Fin(q) => Ext::Fin(-q),
        }
    }

    /// Scalar action by a nonnegative weight: `c • bot = bot` for every c,
    /// `0 • top = 0`, positive `c • top = top`.
    pub fn smul(c: &NNRat, x: &Ext) -> Ext {
        match x {
            Ext::Bot => Ext::Bot,
            Ext::Top => {
                if c.is_zero() {
                    Ext::zero()
                } else {
                    Ext::Top
                }
            }
            Ext::Fin(q) => Ext::Fin(c.rat() * q),
        }
    }
}

impl From<Rat> for Ext {
    fn from(q: Rat) -> Ext {
        Ext::Fin(q)
    }
}

impl From<i64> for Ext {
    fn from(n: i64) -> Ext {
        Ext::Fin(Rat::from_int(n))
    }
}

impl Neg for &Ext {
    type Output = Ext;
    fn neg(self) -> Ext {
        Ext::neg(self)
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, other: &Ext) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ext {
    fn cmp(&self, other: &Ext) -> Ordering {
        match (self, other) {
            (Ext::Bot, Ext::Bot) | (Ext::Top, Ext::Top) => Ordering::Equal,
            (Ext::Bot, _) | (_, Ext::Top) => Ordering::Less,
            (_, Ext::Bot) | (Ext::Top, _) => Ordering::Greater,
            (Ext::Fin(a), Ext::Fin(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ext::Bot => f.write_str("bot"),
            Ext::Top => f.write_str("top"),
            Ext::Fin(q) => q.fmt(f),
        }
    }
}

impl fmt::Debug for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Ext {
    type Err = ParseExtError;

    fn from_str(s: &str) -> Result<Ext, ParseExtError> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("bot") {
            return Ok(Ext::Bot);
        }
        if t.eq_ignore_ascii_case("top") {
            return Ok(Ext::Top);
        }
        t.parse::<Rat>().map(Ext::Fin).map_err(|_| ParseExtError {
            literal: s.to_owned(),
        })
    }
}

impl Serialize for Ext {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ext {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Ext, D::Error> {
        struct ExtVisitor;

        impl de::Visitor<'_> for ExtVisitor {
            type Value = Ext;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("\"bot\", \"top\", a rational literal, or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<Ext, E> {
                v.parse().map_err(de::Error::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<Ext, E> {
                Ok(Ext::from(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<Ext, E> {
                Ok(Ext::Fin(Rat::from(num::BigInt::from(v))))
            }
        }

        deserializer.deserialize_any(ExtVisitor)
    }
}

/// Weighted dot product: the sum of `w_i • v_i`. Empty vectors give zero.
pub fn dot_weig(v: &[Ext], w: &[NNRat]) -> Ext {
    assert_eq!(v.len(), w.len(), "dot_weig: length mismatch");
    let mut acc = Ext::zero();
    for (x, c) in v.iter().zip(w) {
        acc = acc.add(&Ext::smul(c, x));
    }
    acc
}

impl Mat<Ext> {
    /// Row-wise weighted dot product with `w`.
    pub fn mul_weig(&self, w: &[NNRat]) -> Vec<Ext> {
        assert_eq!(w.len(), self.cols(), "mul_weig: dimension mismatch");
        (0..self.rows()).map(|i| dot_weig(self.row(i), w)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: i64) -> Ext {
        Ext::from(n)
    }

    fn nn(n: u64) -> NNRat {
        NNRat::from(n)
    }

    /// All variant combinations plus sign cases.
    fn samples() -> Vec<Ext> {
        vec![Ext::Bot, Ext::Top, fin(-1), fin(0), fin(1), fin(2)]
    }

    #[test]
    fn addition_table() {
        assert_eq!(Ext::Bot.add(&Ext::Top), Ext::Bot);
        assert_eq!(Ext::Top.add(&Ext::Bot), Ext::Bot);
        assert_eq!(Ext::Top.add(&fin(5)), Ext::Top);
        assert_eq!(fin(5).add(&Ext::Top), Ext::Top);
        assert_eq!(Ext::Bot.add(&fin(5)), Ext::Bot);
        assert_eq!(Ext::Bot.add(&Ext::Bot), Ext::Bot);
        assert_eq!(Ext::Top.add(&Ext::Top), Ext::Top);
        assert_eq!(fin(2).add(&fin(3)), fin(5));
    }

    #[test]
    fn negation_table() {
        assert_eq!(Ext::Bot.neg(), Ext::Top);
        assert_eq!(Ext::Top.neg(), Ext::Bot);
        assert_eq!(Ext::Fin(Rat::new(3, 2)).neg(), Ext::Fin(Rat::new(-3, 2)));
    }

    #[test]
    fn scalar_action_table() {
        assert_eq!(Ext::smul(&nn(0), &Ext::Bot), Ext::Bot);
        assert_eq!(Ext::smul(&nn(0), &Ext::Top), fin(0));
        assert_eq!(Ext::smul(&nn(0), &fin(7)), fin(0));
        assert_eq!(Ext::smul(&nn(2), &Ext::Bot), Ext::Bot);
        assert_eq!(Ext::smul(&nn(2), &Ext::Top), Ext::Top);
        assert_eq!(Ext::smul(&nn(2), &fin(3)), fin(6));
    }

    #[test]
    fn one_smul_is_identity() {
        for x in samples() {
            assert_eq!(Ext::smul(&nn(1), &x), x);
        }
    }

    #[test]
    fn add_commutative_associative_exhaustive() {
        let s = samples();
        for a in &s {
            for b in &s {
                assert_eq!(a.add(b), b.add(a));
                for c in &s {
                    assert_eq!(a.add(b).add(c), a.add(&b.add(c)));
                }
            }
        }
    }

    #[test]
    fn order_translation_exhaustive() {
        let s = samples();
        for x in &s {
            for y in &s {
                if x <= y {
                    for z in &s {
                        assert!(z.add(x) <= z.add(y), "{z:?} + {x:?} vs {z:?} + {y:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn neg_is_involution() {
        for x in samples() {
            assert_eq!(x.neg().neg(), x);
        }
    }

    #[test]
    fn total_order() {
        assert!(Ext::Bot < fin(-1_000_000));
        assert!(Ext::Top <= Ext::Top);
        assert!(Ext::Fin(Rat::new(1, 3)) < Ext::Fin(Rat::new(1, 2)));
        assert!(fin(1_000_000) < Ext::Top);
        assert!(Ext::Bot < Ext::Top);
    }

    #[test]
    fn dot_weig_examples() {
        assert_eq!(
            dot_weig(&[Ext::Bot, Ext::Top], &[nn(0), nn(1)]),
            Ext::Bot
        );
        assert_eq!(dot_weig(&[], &[]), fin(0));
        assert_eq!(dot_weig(&[fin(2), fin(3)], &[nn(1), nn(2)]), fin(8));
    }

    #[test]
    fn dot_weig_permutation_invariant() {
        let v = vec![Ext::Bot, Ext::Top, fin(3)];
        let w = vec![nn(0), nn(1), nn(2)];
        let base = dot_weig(&v, &w);
        let perms: [[usize; 3]; 6] = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        for p in perms {
            let vp: Vec<Ext> = p.iter().map(|&i| v[i].clone()).collect();
            let wp: Vec<NNRat> = p.iter().map(|&i| w[i].clone()).collect();
            assert_eq!(dot_weig(&vp, &wp), base);
        }
    }

    #[test]
    fn mul_weig_examples() {
        let id = Mat::from_rows(vec![vec![fin(1), fin(0)], vec![fin(0), fin(1)]]);
        assert_eq!(id.mul_weig(&[nn(3), nn(4)]), vec![fin(3), fin(4)]);

        let m = Mat::from_rows(vec![vec![Ext::Bot, Ext::Top]]);
        assert_eq!(m.mul_weig(&[nn(1), nn(1)]), vec![Ext::Bot]);

        let t = Mat::from_rows(vec![vec![Ext::Top]]);
        assert_eq!(t.mul_weig(&[nn(0)]), vec![fin(0)]);
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("bot".parse::<Ext>().unwrap(), Ext::Bot);
        assert_eq!("TOP".parse::<Ext>().unwrap(), Ext::Top);
        assert_eq!("-3/4".parse::<Ext>().unwrap(), Ext::Fin(Rat::new(-3, 4)));
        assert!("nonsense".parse::<Ext>().is_err());
        assert_eq!(Ext::Bot.to_string(), "bot");
        assert_eq!(Ext::Top.to_string(), "top");
        assert_eq!(fin(5).to_string(), "5");
    }
}
