//! Gcd of dense polynomials over `Z`, low-degree coefficient first.
//!
//! Uses the primitive polynomial remainder sequence: pseudo-remainders are
//! reduced to their primitive part at every step, which keeps coefficient
//! growth in check for the small degrees that show up here.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

fn trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive_part(p: &[BigInt]) -> Vec<BigInt> {
    let c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    let sign_fix = p.last().is_some_and(|c| c.is_negative());
    p.iter()
        .map(|x| {
            let q = x / &c;
            if sign_fix {
                -q
            } else {
                q
            }
        })
        .collect()
}

/// A nonzero scalar multiple of the remainder of `a` modulo `b`.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &lr * bi;
        }
        trim(&mut r);
    }
    r
}

/// Gcd over `Z[x]` with positive leading coefficient. Zero inputs are
/// represented by empty vectors; `gcd(0, 0)` is empty.
pub(crate) fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    if a.is_empty() {
        return primitive_part_with_content(&b);
    }
    if b.is_empty() {
        return primitive_part_with_content(&a);
    }
    let c = content(&a).gcd(&content(&b));
    let mut a = primitive_part(&a);
    let mut b = primitive_part(&b);
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive_part(&r);
    }
    a.iter().map(|x| x * &c).collect()
}

fn primitive_part_with_content(p: &[BigInt]) -> Vec<BigInt> {
    if p.last().is_some_and(|c| c.is_negative()) {
        p.iter().map(|x| -x).collect()
    } else {
        p.to_vec()
    }
}

/// Exact quotient `a / b`; the caller guarantees divisibility.
pub(crate) fn div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.is_empty() {
        return r;
    }
    let db = b.len() - 1;
    let lb = &b[db];
    let mut q = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let shift = dr - db;
        let (coef, rem) = r[dr].div_rem(lb);
        debug_assert!(rem.is_zero(), "non-exact dense division");
        for (i, bi) in b.iter().enumerate() {
            r[shift + i] -= &coef * bi;
        }
        q[shift] = coef;
        trim(&mut r);
    }
    debug_assert!(r.is_empty(), "non-exact dense division");
    q
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_of_products() {
        // (x + 1)(x - 2) and (x + 1)(2x + 3)
        let g = poly_gcd(&d(&[-2, -1, 1]), &d(&[3, 5, 2]));
        assert_eq!(g, d(&[1, 1]));
    }

    #[test]
    fn gcd_includes_content() {
        let g = poly_gcd(&d(&[4, 4]), &d(&[6, 6]));
        assert_eq!(g, d(&[2, 2]));
        let g = poly_gcd(&d(&[-3]), &d(&[]));
        assert_eq!(g, d(&[3]));
    }

    #[test]
    fn coprime() {
        assert_eq!(poly_gcd(&d(&[1, 0, 1]), &d(&[1, 1])), d(&[1]));
    }

    #[test]
    fn exact_quotient() {
        assert_eq!(div_exact(&d(&[-2, -1, 1]), &d(&[1, 1])), d(&[-2, 1]));
    }
}
