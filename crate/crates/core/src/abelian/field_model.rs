//! Field models: rules for evaluating `Hom(−, K*)` and `Ext(−, K*)` for a
//! chosen class of base fields, and the structured values they produce.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::group::FgAbelianGroup;
use crate::error::{Error, Result};

/// The class of base field used to evaluate unit-group coefficients.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum FieldModel {
    /// F_q with q a prime power; K* is cyclic of order q−1.
    FiniteField(u64),
    /// Algebraically closed of characteristic zero (ℂ, Q̄).
    AlgClosedChar0,
    /// Algebraically closed of characteristic p.
    AlgClosedCharP(u64),
    Reals,
    Rationals,
    /// Keep every K*-summand formal.
    Symbolic,
}

impl FieldModel {
    /// Parses the CLI spelling: `q=<prime power> | Qbar | Cstar | R | Q | symbolic`.
    pub fn parse(spec: &str) -> Result<FieldModel> {
        let trimmed = spec.trim();
        let model = if let Some(q) = trimmed.strip_prefix("q=") {
            let q: u64 = q
                .parse()
                .map_err(|_| Error::Parse(format!("invalid field size `{q}`")))?;
            FieldModel::FiniteField(q)
        } else if let Some(p) = trimmed.strip_prefix("p=") {
            let p: u64 = p
                .parse()
                .map_err(|_| Error::Parse(format!("invalid characteristic `{p}`")))?;
            FieldModel::AlgClosedCharP(p)
        } else {
            match trimmed {
                "Qbar" | "Cstar" | "C" => FieldModel::AlgClosedChar0,
                "R" => FieldModel::Reals,
                "Q" => FieldModel::Rationals,
                "symbolic" => FieldModel::Symbolic,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown field model `{other}` (expected q=<prime power> | p=<prime> | Qbar | Cstar | R | Q | symbolic)"
                    )))
                }
            }
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            FieldModel::FiniteField(q) => {
                if !is_prime_power(*q) {
                    return Err(Error::UnsupportedModel(format!(
                        "q = {q} is not a prime power"
                    )));
                }
            }
            FieldModel::AlgClosedCharP(p) if !is_prime(*p) => {
                return Err(Error::UnsupportedModel(format!("p = {p} is not prime")));
            }
            _ => {}
        }
        Ok(())
    }

    /// Whether the model is pinned to characteristic zero. `Symbolic` carries
    /// no characteristic and returns false.
    pub fn is_char_zero(&self) -> bool {
        matches!(
            self,
            FieldModel::AlgClosedChar0 | FieldModel::Reals | FieldModel::Rationals
        )
    }

    pub fn has_positive_characteristic(&self) -> bool {
        matches!(
            self,
            FieldModel::FiniteField(_) | FieldModel::AlgClosedCharP(_)
        )
    }
}

impl fmt::Display for FieldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldModel::FiniteField(q) => write!(f, "F_{q}"),
            FieldModel::AlgClosedChar0 => write!(f, "algebraically closed, char 0"),
            FieldModel::AlgClosedCharP(p) => write!(f, "algebraically closed, char {p}"),
            FieldModel::Reals => write!(f, "R"),
            FieldModel::Rationals => write!(f, "Q"),
            FieldModel::Symbolic => write!(f, "symbolic"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn is_prime_power(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut m = n;
    let mut p = 0u64;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return true; // n itself prime
    }
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}

/// A cohomology value with coefficients in `K*`: a number of `K*`-summands,
/// a list of `μ_d(K)`-type torsion summands and a list of `K*/(K*)^d`-type
/// summands, evaluated per field model.
///
/// For every model except `Symbolic` the `mu`/`ext` lists hold the orders of
/// the evaluated finite cyclic groups; under `Symbolic` they hold the formal
/// subscripts `d`. `infinite_ext` flags the countably-infinite `(ℤ/d)^(ω)`
/// part of `ℚ*/(ℚ*)^d`; that part is never merged into the lists.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct GroupValue {
    pub model: FieldModel,
    pub kstar_copies: usize,
    #[serde(
        serialize_with = "super::group::serialize_bigints",
        deserialize_with = "super::group::deserialize_bigints"
    )]
    pub mu: Vec<BigInt>,
    #[serde(
        serialize_with = "super::group::serialize_bigints",
        deserialize_with = "super::group::deserialize_bigints"
    )]
    pub ext: Vec<BigInt>,
    pub infinite_ext: bool,
}

impl GroupValue {
    pub fn trivial(model: FieldModel) -> Self {
        GroupValue {
            model,
            kstar_copies: 0,
            mu: Vec::new(),
            ext: Vec::new(),
            infinite_ext: false,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.kstar_copies == 0 && self.mu.is_empty() && self.ext.is_empty() && !self.infinite_ext
    }

    pub fn direct_sum(&self, other: &GroupValue) -> GroupValue {
        assert_eq!(
            self.model, other.model,
            "cannot sum values over different models"
        );
        GroupValue {
            model: self.model,
            kstar_copies: self.kstar_copies + other.kstar_copies,
            mu: self.mu.iter().chain(&other.mu).cloned().collect(),
            ext: self.ext.iter().chain(&other.ext).cloned().collect(),
            infinite_ext: self.infinite_ext || other.infinite_ext,
        }
    }

    /// The value as a concrete finitely generated group, when the model pins
    /// one down: always for `FiniteField`, and for the other evaluated models
    /// whenever no symbolic `K*` copies and no infinite part remain.
    pub fn concrete(&self) -> Option<FgAbelianGroup> {
        match self.model {
            FieldModel::FiniteField(q) => {
                let kstar = BigInt::from(q - 1);
                let orders = std::iter::repeat_n(kstar, self.kstar_copies)
                    .chain(self.mu.iter().cloned())
                    .chain(self.ext.iter().cloned());
                Some(FgAbelianGroup::from_orders(orders))
            }
            FieldModel::Symbolic => {
                if self.is_trivial() {
                    Some(FgAbelianGroup::trivial())
                } else {
                    None
                }
            }
            _ => {
                if self.kstar_copies == 0 && !self.infinite_ext {
                    Some(FgAbelianGroup::from_orders(
                        self.mu.iter().chain(&self.ext).cloned(),
                    ))
                } else {
                    None
                }
            }
        }
    }
}

impl fmt::Display for GroupValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        if matches!(self.model, FieldModel::FiniteField(_)) {
            return write!(
                f,
                "{}",
                self.concrete().expect("finite-field value is concrete")
            );
        }
        let mut parts = Vec::new();
        match self.kstar_copies {
            0 => {}
            1 => parts.push("K*".to_string()),
            n => parts.push(format!("(K*)^{n}")),
        }
        for d in &self.mu {
            if self.model == FieldModel::Symbolic {
                parts.push(format!("mu_{d}(K)"));
            } else {
                parts.push(format!("Z/{d}"));
            }
        }
        for d in &self.ext {
            if self.model == FieldModel::Symbolic {
                parts.push(format!("K*/(K*)^{d}"));
            } else {
                parts.push(format!("Z/{d}"));
            }
        }
        if self.infinite_ext {
            parts.push("(torsion of countably infinite multiplicity)".to_string());
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// Universal-coefficient evaluation of `H^j(−, K*)` from integral homology:
/// `Hom(H_j, K*) ⊕ Ext(H_{j−1}, K*)`, namely `free_rank(H_j)` copies of
/// `K*`, one `μ_d(K)` per invariant factor `d` of `H_j` and one `K*/(K*)^e`
/// per invariant factor `e` of `H_{j−1}`.
pub fn coefficient_value(
    h_j: &FgAbelianGroup,
    h_jm1: &FgAbelianGroup,
    model: FieldModel,
) -> Result<GroupValue> {
    model.validate()?;
    let mut mu = Vec::new();
    let mut ext = Vec::new();
    let mut infinite_ext = false;

    for d in h_j.invariant_factors() {
        if let Some(order) = eval_mu(d, model) {
            mu.push(order);
        }
    }
    for e in h_jm1.invariant_factors() {
        match model {
            FieldModel::FiniteField(q) => {
                push_nontrivial(&mut ext, e.gcd(&BigInt::from(q - 1)));
            }
            FieldModel::AlgClosedChar0 | FieldModel::AlgClosedCharP(_) => {}
            FieldModel::Reals => push_nontrivial(&mut ext, e.gcd(&BigInt::from(2))),
            FieldModel::Rationals => {
                push_nontrivial(&mut ext, e.gcd(&BigInt::from(2)));
                if e > &BigInt::one() {
                    infinite_ext = true;
                }
            }
            FieldModel::Symbolic => ext.push(e.clone()),
        }
    }

    Ok(GroupValue {
        model,
        kstar_copies: h_j.free_rank(),
        mu,
        ext,
        infinite_ext,
    })
}

fn eval_mu(d: &BigInt, model: FieldModel) -> Option<BigInt> {
    let order = match model {
        FieldModel::FiniteField(q) => d.gcd(&BigInt::from(q - 1)),
        FieldModel::AlgClosedChar0 | FieldModel::Symbolic => d.clone(),
        FieldModel::AlgClosedCharP(p) => {
            let p = BigInt::from(p);
            let mut m = d.clone();
            while (&m % &p).is_zero() {
                m /= &p;
            }
            m
        }
        FieldModel::Reals | FieldModel::Rationals => d.gcd(&BigInt::from(2)),
    };
    (!order.is_one()).then_some(order)
}

fn push_nontrivial(list: &mut Vec<BigInt>, order: BigInt) {
    if !order.is_one() {
        list.push(order);
    }
}

/// Universal-coefficient assembly for the plain coefficient group ℤ/m:
/// `(ℤ/m)^{rank H_j} ⊕ ⊕ ℤ/gcd(d, m) ⊕ ⊕ ℤ/gcd(e, m)`. This is the oracle
/// counterpart of the direct mod-m cochain computation.
pub fn uct_mod(h_j: &FgAbelianGroup, h_jm1: &FgAbelianGroup, m: &BigInt) -> FgAbelianGroup {
    let orders = std::iter::repeat_n(m.clone(), h_j.free_rank())
        .chain(h_j.invariant_factors().iter().map(|d| d.gcd(m)))
        .chain(h_jm1.invariant_factors().iter().map(|e| e.gcd(m)));
    FgAbelianGroup::from_orders(orders)
}
