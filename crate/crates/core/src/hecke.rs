//! Semi-normal action of the Hecke algebra on the hook modules `S(l)`, their
//! characters, and the alternating trace formula for the Alexander
//! polynomial:
//!
//! `Delta = (1/[n]) * sum_l (-1)^l chi_l(w)`.
//!
//! Braid words are applied to basis vectors one column at a time; full
//! matrices are only built for the relation checks.

use std::collections::BTreeMap;

use crate::braid::{BraidWord, CrossingSign};
use crate::hook::{coeff_a, coeff_a_bar, coeff_b, HookShape, SignSequence};
use crate::laurent::{quantum_integer, LaurentPoly, RationalFn};
use crate::{Error, Result};

/// An element of `S(l)` in the basis `{x_eps}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    shape: HookShape,
    entries: BTreeMap<SignSequence, RationalFn>,
}

impl ModuleVector {
    pub fn zero(shape: HookShape) -> Self {
        Self {
            shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis_vector(shape: HookShape, eps: SignSequence) -> Result<Self> {
        if !shape.contains(eps) {
            return Err(Error::InvalidSignSequence(format!(
                "{eps} is not a basis label for the hook with n = {}, leg = {}",
                shape.n(),
                shape.leg()
            )));
        }
        let mut v = Self::zero(shape);
        v.entries.insert(eps, RationalFn::one());
        Ok(v)
    }

    pub fn shape(&self) -> HookShape {
        self.shape
    }

    pub fn coeff(&self, eps: SignSequence) -> RationalFn {
        self.entries
            .get(&eps)
            .cloned()
            .unwrap_or_else(RationalFn::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (SignSequence, &RationalFn)> {
        self.entries.iter().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn add_to(&mut self, eps: SignSequence, c: RationalFn) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(eps).or_insert_with(RationalFn::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.entries.remove(&eps);
        }
    }
}

fn check_generator(shape: HookShape, r: usize) -> Result<()> {
    if r == 0 || r >= shape.n() {
        return Err(Error::IndexOutOfRange {
            index: r,
            strands: shape.n(),
        });
    }
    Ok(())
}

/// `H_r^{±1}` acting on `vec`:
/// `H_r x_eps = a_r(eps) x_eps + b_r(eps) x_{s_r eps}`, with `a` replaced by
/// its bar for the inverse. The swap term is dropped whenever `s_r eps`
/// would start with `-`.
pub fn apply_generator(
    shape: HookShape,
    r: usize,
    sign: CrossingSign,
    vec: &ModuleVector,
) -> Result<ModuleVector> {
    check_generator(shape, r)?;
    if vec.shape != shape {
        return Err(Error::ShapeMismatch);
    }
    let mut out = ModuleVector::zero(shape);
    for (&eps, c) in &vec.entries {
        let diag = match sign {
            CrossingSign::Positive => coeff_a(r, eps)?,
            CrossingSign::Negative => coeff_a_bar(r, eps)?,
        };
        out.add_to(eps, c * &diag);
        let swapped = eps.swap(r);
        if swapped != eps && swapped.is_hook_label() {
            out.add_to(swapped, c * &coeff_b(r, eps)?);
        }
    }
    Ok(out)
}

/// Applies the whole word, bottom letter first.
pub fn apply_word(shape: HookShape, w: &BraidWord, vec: &ModuleVector) -> Result<ModuleVector> {
    if w.strands() != shape.n() {
        return Err(Error::StrandMismatch {
            word: w.strands(),
            module: shape.n(),
        });
    }
    let mut cur = vec.clone();
    for l in w.letters().iter().rev() {
        cur = apply_generator(shape, l.index, l.sign, &cur)?;
    }
    Ok(cur)
}

/// `chi_l(w)`: the trace of the word acting on `S(l)`.
pub fn character(shape: HookShape, w: &BraidWord) -> Result<RationalFn> {
    if w.strands() != shape.n() {
        return Err(Error::StrandMismatch {
            word: w.strands(),
            module: shape.n(),
        });
    }
    let diagonal = |eps: SignSequence| -> Result<RationalFn> {
        let x = ModuleVector::basis_vector(shape, eps)?;
        Ok(apply_word(shape, w, &x)?.coeff(eps))
    };
    let basis = shape.basis();
    #[cfg(feature = "parallel")]
    let diag: Vec<RationalFn> = {
        use rayon::prelude::*;
        basis
            .par_iter()
            .map(|e| diagonal(*e))
            .collect::<Result<_>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let diag: Vec<RationalFn> = basis.iter().map(|e| diagonal(*e)).collect::<Result<_>>()?;
    Ok(diag.iter().fold(RationalFn::zero(), |acc, d| &acc + d))
}

/// `(1/[n]) * sum_l (-1)^l chi_l(w)`, which must be a Laurent polynomial.
pub fn alexander_via_trace(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.strands();
    let mut total = RationalFn::zero();
    for leg in 0..n {
        let chi = character(HookShape::new(n, leg)?, w)?;
        total = if leg % 2 == 0 {
            &total + &chi
        } else {
            &total - &chi
        };
    }
    let total = total
        .to_laurent()
        .ok_or_else(|| Error::InexactDivision(format!("alternating character sum {total}")))?;
    total.exact_div(&quantum_integer(n as i64))
}

/// A sparse square matrix over `RationalFn`, indexed by a module's basis in
/// enumeration order. Entry `(i, j)` is the coefficient of `x_i` in the image
/// of `x_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HeckeMatrix {
    shape: HookShape,
    basis: Vec<SignSequence>,
    entries: BTreeMap<(usize, usize), RationalFn>,
}

impl HeckeMatrix {
    pub fn scalar(shape: HookShape, c: &RationalFn) -> Self {
        let basis = shape.basis();
        let entries = if c.is_zero() {
            BTreeMap::new()
        } else {
            (0..basis.len()).map(|i| ((i, i), c.clone())).collect()
        };
        Self {
            shape,
            basis,
            entries,
        }
    }

    pub fn identity(shape: HookShape) -> Self {
        Self::scalar(shape, &RationalFn::one())
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SignSequence] {
        &self.basis
    }

    pub fn get(&self, row: usize, col: usize) -> RationalFn {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(RationalFn::zero)
    }

    /// Nonzero entries as (row, column, value).
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &RationalFn)> {
        self.entries.iter().map(|((i, j), c)| (*i, *j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn insert_add(&mut self, key: (usize, usize), c: RationalFn) {
        if c.is_zero() {
            return;
        }
        let slot = self.entries.entry(key).or_insert_with(RationalFn::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.entries.remove(&key);
        }
    }

    pub fn mul(&self, rhs: &HeckeMatrix) -> HeckeMatrix {
        debug_assert_eq!(self.shape, rhs.shape);
        let mut by_row: BTreeMap<usize, Vec<(usize, &RationalFn)>> = BTreeMap::new();
        for ((k, j), c) in &rhs.entries {
            by_row.entry(*k).or_default().push((*j, c));
        }
        let mut out = HeckeMatrix::scalar(self.shape, &RationalFn::zero());
        for ((i, k), a) in &self.entries {
            if let Some(row) = by_row.get(k) {
                for (j, b) in row {
                    out.insert_add((*i, *j), a * *b);
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &HeckeMatrix) -> HeckeMatrix {
        let mut out = self.clone();
        for (k, c) in &rhs.entries {
            out.insert_add(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &HeckeMatrix) -> HeckeMatrix {
        let mut out = self.clone();
        for (k, c) in &rhs.entries {
            out.insert_add(*k, -c);
        }
        out
    }
}

/// The matrix of `H_r` (or `H_r^-1`) on `S(l)`.
pub fn generator_matrix(shape: HookShape, r: usize, sign: CrossingSign) -> Result<HeckeMatrix> {
    check_generator(shape, r)?;
    let mut m = HeckeMatrix::scalar(shape, &RationalFn::zero());
    let index: BTreeMap<SignSequence, usize> =
        m.basis.iter().enumerate().map(|(i, e)| (*e, i)).collect();
    for (j, &eps) in m.basis.clone().iter().enumerate() {
        let image = apply_generator(shape, r, sign, &ModuleVector::basis_vector(shape, eps)?)?;
        for (e, c) in image.entries() {
            m.insert_add((index[&e], j), c.clone());
        }
    }
    Ok(m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub shape: HookShape,
    pub relation: String,
    pub holds: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RelationReport {
    pub checks: Vec<RelationCheck>,
}

impl RelationReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RelationCheck> {
        self.checks.iter().filter(|c| !c.holds)
    }
}

/// Checks the defining relations as exact matrix identities on every hook
/// module for every strand count up to `max_n`:
///
/// * `(H_r - v)(H_r + v^-1) = 0`
/// * `H_r^-1 = H_r - (v - v^-1)` and `H_r H_r^-1 = 1`
/// * `H_r H_{r+1} H_r = H_{r+1} H_r H_{r+1}`
/// * `H_r H_s = H_s H_r` for `|r - s| > 1`
pub fn check_hecke_relations(max_n: usize) -> Result<RelationReport> {
    let v = RationalFn::from(LaurentPoly::v());
    let v_inv = RationalFn::from(LaurentPoly::v_pow(-1));
    let mut report = RelationReport::default();
    for n in 2..=max_n {
        for leg in 0..n {
            let shape = HookShape::new(n, leg)?;
            let mut push = |relation: String, holds: bool| {
                report.checks.push(RelationCheck {
                    shape,
                    relation,
                    holds,
                })
            };
            let gens = (1..n)
                .map(|r| generator_matrix(shape, r, CrossingSign::Positive))
                .collect::<Result<Vec<_>>>()?;
            let id = HeckeMatrix::identity(shape);
            for r in 1..n {
                let h = &gens[r - 1];
                let quad = h
                    .sub(&HeckeMatrix::scalar(shape, &v))
                    .mul(&h.add(&HeckeMatrix::scalar(shape, &v_inv)));
                push(format!("quadratic r={r}"), quad.is_zero());

                let inv = generator_matrix(shape, r, CrossingSign::Negative)?;
                let shifted = h.sub(&HeckeMatrix::scalar(shape, &(&v - &v_inv)));
                push(
                    format!("inverse r={r}"),
                    inv == shifted && h.mul(&inv) == id,
                );

                if r + 1 < n {
                    let g = &gens[r];
                    let lhs = h.mul(g).mul(h);
                    let rhs = g.mul(h).mul(g);
                    push(format!("braid r={r}"), lhs == rhs);
                }
                for s in r + 2..n {
                    let g = &gens[s - 1];
                    push(format!("commute r={r} s={s}"), h.mul(g) == g.mul(h));
                }
            }
        }
    }
    Ok(report)
}
