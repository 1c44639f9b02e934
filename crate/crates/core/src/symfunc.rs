//! Elementary symmetric polynomials of weight multisets and partition enumeration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::model::{FixedPoint, Partition};

/// Coefficients `[e_0, e_1, ..., e_n]` of `prod_j (1 + k_j z)`.
pub fn elementary_all(weights: &[BigInt]) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); weights.len() + 1];
    e[0] = BigInt::one();
    for (m, k) in weights.iter().enumerate() {
        for i in (1..=m + 1).rev() {
            let t = &e[i - 1] * k;
            e[i] += t;
        }
    }
    e
}

/// The `k`-th elementary symmetric polynomial evaluated at `weights`.
pub fn elementary(k: usize, weights: &[BigInt]) -> Result<BigInt> {
    if k > weights.len() {
        return Err(Error::IndexOutOfRange {
            index: k,
            len: weights.len(),
        });
    }
    Ok(elementary_all(weights).swap_remove(k))
}

fn e_product(weights: &[BigInt], lambda: &Partition) -> Result<BigInt> {
    if lambda.largest() > weights.len() {
        return Err(Error::PartTooLarge {
            part: lambda.largest(),
            len: weights.len(),
        });
    }
    let e = elementary_all(weights);
    Ok(lambda.parts().iter().map(|&p| &e[p]).product())
}

/// `c_λ` at a fixed point: `prod_t e_{λ_t}(k_1, ..., k_n)`.
pub fn c_lambda_at_point(point: &FixedPoint, lambda: &Partition) -> Result<BigInt> {
    e_product(&point.weights, lambda)
}

/// `prod_t σ_{λ_t}` where `σ_i` is elementary symmetric in the squared weights.
pub fn sigma_at_point(point: &FixedPoint, lambda: &Partition) -> Result<BigInt> {
    let squares: Vec<BigInt> = point.weights.iter().map(|k| k * k).collect();
    e_product(&squares, lambda)
}

/// All partitions of `m`, largest parts first (reverse lexicographic).
pub fn partitions_of(m: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::new(prefix.clone()).expect("nonempty positive parts"));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            prefix.push(p);
            go(rest - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if m > 0 {
        go(m, m, &mut Vec::new(), &mut out);
    }
    out
}

/// A symmetric polynomial of the shape the residue formulas are evaluated on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SymmetricFunctionSpec {
    One,
    ElementaryProduct(Partition),
    /// `(prod_t e_{λ_t})^i`
    Power(Partition, usize),
}

impl SymmetricFunctionSpec {
    /// Degree with `deg x_i = 1`, counted in the elementary variables.
    /// The squared-weight evaluation doubles it.
    pub fn degree(&self) -> usize {
        match self {
            SymmetricFunctionSpec::One => 0,
            SymmetricFunctionSpec::ElementaryProduct(l) => l.weight(),
            SymmetricFunctionSpec::Power(l, i) => l.weight() * i,
        }
    }

    pub fn at_point(&self, point: &FixedPoint, squared: bool) -> Result<BigInt> {
        let eval = |l: &Partition| {
            if squared {
                sigma_at_point(point, l)
            } else {
                c_lambda_at_point(point, l)
            }
        };
        match self {
            SymmetricFunctionSpec::One => Ok(BigInt::one()),
            SymmetricFunctionSpec::ElementaryProduct(l) => eval(l),
            SymmetricFunctionSpec::Power(l, i) => Ok(num_traits::pow(eval(l)?, *i)),
        }
    }
}

impl fmt::Display for SymmetricFunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetricFunctionSpec::One => f.write_str("1"),
            SymmetricFunctionSpec::ElementaryProduct(l) => write!(f, "{l}"),
            SymmetricFunctionSpec::Power(l, i) => write!(f, "({l})^{i}"),
        }
    }
}
