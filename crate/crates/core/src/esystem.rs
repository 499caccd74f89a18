//! Harmonic analysis on the cyclic group `C_d` and the solutions of the
//! E-system.

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::{rat, Coeff, Cyclotomic, Rational};

/// An element `Σ c_k t^k` of the group algebra of `C_d` over `Q(ζ_d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupAlgebraElement {
    coeffs: Vec<Cyclotomic>,
}

fn zeta(d: u32, k: i64) -> Cyclotomic {
    Cyclotomic::zeta_pow(d, k)
}

impl GroupAlgebraElement {
    pub fn new(coeffs: Vec<Cyclotomic>) -> Self {
        assert!(!coeffs.is_empty(), "group algebra of C_0");
        GroupAlgebraElement { coeffs }
    }

    pub fn zero(d: u32) -> Self {
        Self::new(vec![Cyclotomic::zero(); d as usize])
    }

    pub fn from_rationals(v: &[Rational]) -> Self {
        Self::new(v.iter().cloned().map(Cyclotomic::rational).collect())
    }

    pub fn order(&self) -> u32 {
        self.coeffs.len() as u32
    }

    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    /// Coefficient of `t^k`, index taken mod `d`.
    pub fn at(&self, k: i64) -> &Cyclotomic {
        &self.coeffs[k.rem_euclid(self.order() as i64) as usize]
    }

    /// `δ_a = t^a`.
    pub fn delta(d: u32, a: i64) -> Self {
        let mut x = Self::zero(d);
        x.coeffs[a.rem_euclid(d as i64) as usize] = Cyclotomic::one();
        x
    }

    /// The character `𝐢_a = Σ_s ζ^{as} t^s`.
    pub fn character(d: u32, a: i64) -> Self {
        Self::new((0..d as i64).map(|s| zeta(d, a * s)).collect())
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Mismatch(format!(
                "C_{} vs C_{}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    /// `(a ∗ b)_r = Σ_s a_s b_{r-s}`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let d = self.order() as i64;
        Ok(Self::new(
            (0..d)
                .map(|r| {
                    (0..d).fold(Cyclotomic::zero(), |acc, s| {
                        acc.add(&self.at(s).mul(other.at(r - s)))
                    })
                })
                .collect(),
        ))
    }

    /// Coordinatewise product.
    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.mul(b))
                .collect(),
        ))
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    /// `ŷ = Σ_m (y ∗ 𝐢_m)(0) t^m`, i.e. `ŷ_m = Σ_s y_s ζ^{-ms}`.
    pub fn fourier(&self) -> Self {
        let d = self.order();
        Self::new(
            (0..d as i64)
                .map(|m| {
                    (0..d as i64).fold(Cyclotomic::zero(), |acc, s| {
                        acc.add(&self.at(s).mul(&zeta(d, -m * s)))
                    })
                })
                .collect(),
        )
    }

    /// Inverse Fourier transform.
    pub fn inverse_fourier(&self) -> Self {
        let d = self.order();
        let inv = Cyclotomic::rational(rat(1, d as i64));
        Self::new(
            (0..d as i64)
                .map(|s| {
                    (0..d as i64)
                        .fold(Cyclotomic::zero(), |acc, m| {
                            acc.add(&self.at(m).mul(&zeta(d, m * s)))
                        })
                        .mul(&inv)
                })
                .collect(),
        )
    }

    /// `Σ_k c_{-k} t^k`.
    pub fn reversed(&self) -> Self {
        let d = self.order() as i64;
        Self::new((0..d).map(|k| self.at(-k).clone()).collect())
    }
}

/// A solution of the E-system, parametrized by a nonempty `D ⊆ Z/dZ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ESystemSolution {
    pub d: u32,
    pub subset: Vec<u32>,
    /// `x_0, ..., x_{d-1}` with `x_0 = 1`.
    pub x: Vec<Cyclotomic>,
    /// `E = 1/|D|`.
    pub e: Rational,
}

impl ESystemSolution {
    /// `x_s`, index taken mod `d`.
    pub fn x(&self, s: u32) -> Cyclotomic {
        self.x[(s % self.d) as usize].clone()
    }
}

impl fmt::Display for ESystemSolution {
    /// `D={0,2} x=(1, 0, 1, 0) E=1/2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dset: Vec<String> = self.subset.iter().map(|m| m.to_string()).collect();
        let xs: Vec<String> = self.x.iter().map(|v| v.to_string()).collect();
        write!(
            f,
            "D={{{}}} x=({}) E={}",
            dset.join(","),
            xs.join(", "),
            self.e
        )
    }
}

/// Validates and canonicalizes (sorts, dedups) a subset of `Z/dZ`.
pub fn canonical_subset(d: u32, subset: &[u32]) -> Result<Vec<u32>> {
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    let mut v = subset.to_vec();
    if let Some(&m) = v.iter().find(|&&m| m >= d) {
        return Err(Error::SubsetOutOfRange(m as i64, d));
    }
    v.sort_unstable();
    v.dedup();
    Ok(v)
}

/// `x_s = (1/|D|) Σ_{m ∈ D} ζ_d^{ms}`.
pub fn esystem_solution(d: u32, subset: &[u32]) -> Result<ESystemSolution> {
    if d == 0 {
        return Err(Error::IndexOutOfRange {
            what: "modulus",
            index: 0,
        });
    }
    let subset = canonical_subset(d, subset)?;
    let k = subset.len() as i64;
    let inv = Cyclotomic::rational(rat(1, k));
    let x = (0..d as i64)
        .map(|s| {
            subset
                .iter()
                .fold(Cyclotomic::zero(), |acc, &m| {
                    acc.add(&zeta(d, m as i64 * s))
                })
                .mul(&inv)
        })
        .collect();
    Ok(ESystemSolution {
        d,
        subset,
        x,
        e: rat(1, k),
    })
}

/// All `2^d - 1` solutions, ordered by subset bitmask.
pub fn all_solutions(d: u32) -> Vec<ESystemSolution> {
    (1u32..(1 << d))
        .map(|mask| {
            let subset: Vec<u32> = (0..d).filter(|m| mask >> m & 1 == 1).collect();
            esystem_solution(d, &subset).unwrap()
        })
        .collect()
}

/// `(1/d) Σ_s x_{m+s} x_{d-s}`.
pub fn e_shift(x: &[Cyclotomic], m: i64) -> Cyclotomic {
    let d = x.len() as i64;
    let at = |k: i64| &x[k.rem_euclid(d) as usize];
    (0..d)
        .fold(Cyclotomic::zero(), |acc, s| acc.add(&at(m + s).mul(at(-s))))
        .mul(&Cyclotomic::rational(rat(1, d)))
}

/// Checks `Σ_s x_{m+s} x_{d-s} = x_m Σ_s x_s x_{d-s}` for every `m`.
pub fn verify_esystem(x: &[Cyclotomic]) -> bool {
    if x.is_empty() {
        return false;
    }
    let e = e_shift(x, 0);
    (0..x.len() as i64).all(|m| e_shift(x, m) == x[m as usize].mul(&e))
}

/// Exhaustive search in the Fourier domain: `x ∗ x = c·x` forces every
/// coordinate of `x̂` into `{0, c}`, and `x_0 = 1` fixes `c`. Returns the
/// solutions found, as `x` vectors, in subset-bitmask order of the support
/// of `x̂`.
pub fn fourier_search(d: u32) -> Vec<Vec<Cyclotomic>> {
    let mut out = Vec::new();
    for mask in 0u32..(1 << d) {
        let support = mask.count_ones();
        if support == 0 {
            continue;
        }
        let c = Cyclotomic::rational(rat(d as i64, support as i64));
        let hat = GroupAlgebraElement::new(
            (0..d)
                .map(|m| {
                    if mask >> m & 1 == 1 {
                        c.clone()
                    } else {
                        Cyclotomic::zero()
                    }
                })
                .collect(),
        );
        let x = hat.inverse_fourier();
        if x.coeffs[0].is_one() && verify_esystem(&x.coeffs) {
            out.push(x.coeffs);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cy(n: i64) -> Cyclotomic {
        Cyclotomic::rational(rat(n, 1))
    }

    #[test]
    fn delta_convolution() {
        let a = GroupAlgebraElement::delta(5, 2);
        let b = GroupAlgebraElement::delta(5, 4);
        assert_eq!(a.convolve(&b).unwrap(), GroupAlgebraElement::delta(5, 1));
    }

    #[test]
    fn fourier_special_values() {
        for d in 1..=6u32 {
            for a in 0..d as i64 {
                let delta = GroupAlgebraElement::delta(d, a);
                assert_eq!(delta.fourier(), GroupAlgebraElement::character(d, -a));
                let ch = GroupAlgebraElement::character(d, a);
                assert_eq!(ch.fourier(), delta.scale(&cy(d as i64)));
            }
        }
    }

    #[test]
    fn named_solutions() {
        let s = esystem_solution(2, &[1]).unwrap();
        assert_eq!(s.x, vec![cy(1), cy(-1)]);
        let s = esystem_solution(5, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(s.x, vec![cy(1), cy(0), cy(0), cy(0), cy(0)]);
        let s = esystem_solution(4, &[0, 2]).unwrap();
        assert_eq!(s.x, vec![cy(1), cy(0), cy(1), cy(0)]);
        assert_eq!(s.to_string(), "D={0,2} x=(1, 0, 1, 0) E=1/2");
        assert!(esystem_solution(3, &[]).is_err());
    }

    #[test]
    fn verification_examples() {
        assert!(verify_esystem(&[cy(1), cy(0)]));
        assert!(verify_esystem(&[cy(1), cy(-1)]));
        assert!(!verify_esystem(&[cy(1), cy(2)]));
    }
}
