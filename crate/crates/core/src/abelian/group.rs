//! Finitely generated abelian groups in invariant-factor form.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::de::Error as DeError;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A finitely generated abelian group `ℤ^free_rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k`
/// with `d₁ | d₂ | … | d_k` and every `d_i ≥ 2`.
///
/// Two groups are isomorphic if and only if they are equal, so `==` is the
/// isomorphism test.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FgAbelianGroup {
    free_rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        FgAbelianGroup {
            free_rank: 0,
            invariant_factors: Vec::new(),
        }
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup {
            free_rank: rank,
            invariant_factors: Vec::new(),
        }
    }

    /// ℤ/d, with ℤ/0 read as ℤ and ℤ/1 as the trivial group.
    pub fn cyclic(d: impl Into<BigInt>) -> Self {
        let d: BigInt = d.into();
        let d = if d.sign() == num_bigint::Sign::Minus {
            -d
        } else {
            d
        };
        if d.is_zero() {
            FgAbelianGroup::free(1)
        } else if d.is_one() {
            FgAbelianGroup::trivial()
        } else {
            FgAbelianGroup {
                free_rank: 0,
                invariant_factors: vec![d],
            }
        }
    }

    /// Builds a group from an arbitrary list of cyclic orders (0 meaning ℤ),
    /// normalizing to the invariant-factor chain. Factors of 1 are dropped.
    pub fn from_orders(orders: impl IntoIterator<Item = BigInt>) -> Self {
        let mut free = 0usize;
        let mut torsion: Vec<BigInt> = Vec::new();
        for d in orders {
            let d = if d.sign() == num_bigint::Sign::Minus {
                -d
            } else {
                d
            };
            if d.is_zero() {
                free += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        normalize_chain(&mut torsion);
        FgAbelianGroup {
            free_rank: free,
            invariant_factors: torsion,
        }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut torsion: Vec<BigInt> = self
            .invariant_factors
            .iter()
            .chain(&other.invariant_factors)
            .cloned()
            .collect();
        normalize_chain(&mut torsion);
        FgAbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            invariant_factors: torsion,
        }
    }
}

/// Rewrites a multiset of torsion orders (each ≥ 2) into the canonical
/// divisibility chain by gcd/lcm exchanges.
fn normalize_chain(factors: &mut Vec<BigInt>) {
    factors.retain(|d| !d.is_one());
    if factors.len() < 2 {
        return;
    }
    loop {
        let mut changed = false;
        for i in 0..factors.len() {
            for j in i + 1..factors.len() {
                if !(&factors[j] % &factors[i]).is_zero() {
                    let g = factors[i].gcd(&factors[j]);
                    let l = (&factors[i] / &g) * &factors[j];
                    factors[i] = g;
                    factors[j] = l;
                    changed = true;
                }
            }
        }
        if !changed {
            break;
        }
    }
    factors.retain(|d| !d.is_one());
    factors.sort();
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub(crate) fn serialize_bigints<S: Serializer>(
    values: &[BigInt],
    ser: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(values.len()))?;
    for v in values {
        seq.serialize_element(
            &serde_json::Number::from_str(&v.to_string()).map_err(serde::ser::Error::custom)?,
        )?;
    }
    seq.end()
}

pub(crate) fn deserialize_bigints<'de, D: Deserializer<'de>>(
    de: D,
) -> std::result::Result<Vec<BigInt>, D::Error> {
    let numbers: Vec<serde_json::Number> = Vec::deserialize(de)?;
    numbers
        .into_iter()
        .map(|n| BigInt::from_str(&n.to_string()).map_err(D::Error::custom))
        .collect()
}

/// Serialized as `{"free_rank": r, "torsion": [d₁, …]}`.
impl Serialize for FgAbelianGroup {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = ser.serialize_struct("FgAbelianGroup", 2)?;
        s.serialize_field("free_rank", &self.free_rank)?;
        let torsion: std::result::Result<Vec<serde_json::Number>, _> = self
            .invariant_factors
            .iter()
            .map(|d| serde_json::Number::from_str(&d.to_string()))
            .collect();
        s.serialize_field("torsion", &torsion.map_err(serde::ser::Error::custom)?)?;
        s.end()
    }
}

impl<'de> Deserialize<'de> for FgAbelianGroup {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            free_rank: usize,
            torsion: Vec<serde_json::Number>,
        }
        let raw = Raw::deserialize(de)?;
        let torsion: std::result::Result<Vec<BigInt>, _> = raw
            .torsion
            .iter()
            .map(|n| BigInt::from_str(&n.to_string()))
            .collect();
        let mut g = FgAbelianGroup {
            free_rank: raw.free_rank,
            invariant_factors: torsion.map_err(D::Error::custom)?,
        };
        normalize_chain(&mut g.invariant_factors);
        Ok(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalization_to_invariant_factors() {
        // Z/2 ⊕ Z/3 is reported as Z/6
        let g = FgAbelianGroup::from_orders([BigInt::from(2), BigInt::from(3)]);
        assert_eq!(g, FgAbelianGroup::cyclic(6));
        // Z/4 ⊕ Z/6 → Z/2 ⊕ Z/12
        let g = FgAbelianGroup::from_orders([BigInt::from(4), BigInt::from(6)]);
        assert_eq!(g.invariant_factors(), &[BigInt::from(2), BigInt::from(12)]);
        // factors of 1 dropped, 0 means a free summand
        let g = FgAbelianGroup::from_orders([BigInt::from(1), BigInt::from(0)]);
        assert_eq!(g, FgAbelianGroup::free(1));
    }

    #[test]
    fn display_conventions() {
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(1).to_string(), "Z");
        let g = FgAbelianGroup::free(2).direct_sum(&FgAbelianGroup::cyclic(2));
        assert_eq!(g.to_string(), "Z^2 + Z/2");
    }

    #[test]
    fn json_round_trip() {
        let g = FgAbelianGroup::free(3).direct_sum(&FgAbelianGroup::cyclic(12));
        let text = serde_json::to_string(&g).unwrap();
        assert_eq!(text, r#"{"free_rank":3,"torsion":[12]}"#);
        let back: FgAbelianGroup = serde_json::from_str(&text).unwrap();
        assert_eq!(back, g);
    }
}
