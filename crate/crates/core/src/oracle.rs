//! Reduced Burau representation, used as an independent check: for a braid
//! on `n` strands,
//!
//! `det(B(w) - I) = ± t^k * Delta(t) * (1 + t + ... + t^(n-1))`.
//!
//! Polynomials here are in `t`, not `v`.

use crate::braid::{component_count, BraidLetter, BraidWord, CrossingSign};
use crate::laurent::{equal_up_to_unit, to_alexander_t, to_conway, AlexanderPoly, LaurentPoly};
use crate::state_sum::evaluate_dp;
use crate::{Error, Result};

/// Convention: the reduced Burau image of `sigma_i` acts on rows/columns
/// `i-1, i, i+1` (1-based, truncated at the edges) by
///
/// ```text
/// [ 1   t   0 ]
/// [ 0  -t   0 ]
/// [ 0   1   1 ]
/// ```
///
/// and `sigma_i^-1` by its inverse `[[1, 1, 0], [0, -1/t, 0], [0, 1/t, 1]]`.
/// Words multiply left to right in reading order.
const POSITIVE_BLOCK: [[(i64, i64); 3]; 3] = [
    [(1, 0), (1, 1), (0, 0)],
    [(0, 0), (-1, 1), (0, 0)],
    [(0, 0), (1, 0), (1, 0)],
];
const NEGATIVE_BLOCK: [[(i64, i64); 3]; 3] = [
    [(1, 0), (1, 0), (0, 0)],
    [(0, 0), (-1, -1), (0, 0)],
    [(0, 0), (1, -1), (1, 0)],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BurauMatrix {
    rows: Vec<Vec<LaurentPoly>>,
}

impl BurauMatrix {
    pub fn identity(dim: usize) -> Self {
        let rows = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| {
                        if i == j {
                            LaurentPoly::one()
                        } else {
                            LaurentPoly::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        Self { rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.rows[i][j]
    }

    /// Image of a single generator on `strands` strands.
    pub fn generator(letter: BraidLetter, strands: usize) -> Self {
        let dim = strands - 1;
        let mut m = Self::identity(dim);
        let block = match letter.sign {
            CrossingSign::Positive => &POSITIVE_BLOCK,
            CrossingSign::Negative => &NEGATIVE_BLOCK,
        };
        // 0-based centre row is index - 1
        let centre = letter.index as i64 - 1;
        for (bi, block_row) in block.iter().enumerate() {
            for (bj, &(c, e)) in block_row.iter().enumerate() {
                let (i, j) = (centre + bi as i64 - 1, centre + bj as i64 - 1);
                if (0..dim as i64).contains(&i) && (0..dim as i64).contains(&j) {
                    m.rows[i as usize][j as usize] = LaurentPoly::monomial(c, e);
                }
            }
        }
        m
    }

    pub fn mul(&self, rhs: &BurauMatrix) -> BurauMatrix {
        let n = self.dim();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = LaurentPoly::zero();
                        for k in 0..n {
                            if !self.rows[i][k].is_zero() && !rhs.rows[k][j].is_zero() {
                                acc += &(&self.rows[i][k] * &rhs.rows[k][j]);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        BurauMatrix { rows }
    }

    pub fn minus_identity(&self) -> BurauMatrix {
        let mut m = self.clone();
        for i in 0..m.dim() {
            m.rows[i][i] -= &LaurentPoly::one();
        }
        m
    }

    /// Fraction-free (Bareiss) elimination; every division is exact.
    pub fn determinant(&self) -> LaurentPoly {
        let n = self.dim();
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut a = self.rows.clone();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        negate = !negate;
                    }
                    None => return LaurentPoly::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.exact_div(&prev).expect("Bareiss minors divide exactly");
                }
                a[i][k] = LaurentPoly::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -det
        } else {
            det
        }
    }
}

pub fn reduced_burau(w: &BraidWord) -> Result<BurauMatrix> {
    if w.strands() < 2 {
        return Err(Error::TooFewStrands);
    }
    let mut m = BurauMatrix::identity(w.strands() - 1);
    for l in w.letters() {
        m = m.mul(&BurauMatrix::generator(*l, w.strands()));
    }
    Ok(m)
}

/// `det(B(w) - I) / (1 + t + ... + t^(n-1))`, a polynomial in `t` that equals
/// the Alexander polynomial up to a unit `± t^k`.
pub fn alexander_up_to_units(w: &BraidWord) -> Result<LaurentPoly> {
    let det = reduced_burau(w)?.minus_identity().determinant();
    let cyclotomic = LaurentPoly::from_terms((0..w.strands() as i64).map(|e| (e, 1)));
    det.exact_div(&cyclotomic)
}

/// Compares the state-sum value (through `z` and then `t`) with the Burau
/// value up to units. Both vanishing counts as agreement.
pub fn cross_validate(w: &BraidWord) -> Result<bool> {
    let conway = to_conway(&evaluate_dp(w)?)?;
    let ours = to_alexander_t(&conway, component_count(w));
    let burau = AlexanderPoly::from_integer_t(&alexander_up_to_units(w)?);
    Ok(equal_up_to_unit(&ours, &burau))
}
