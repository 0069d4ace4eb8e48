//! Hook partitions `(n - l, 1^l)`, their standard tableaux encoded as sign
//! sequences, residues, and the semi-normal coefficients `a_r`, `b_r`.
//!
//! A sign sequence records, for each entry `1..=n`, whether it sits on the
//! first row (`+`) or down the leg (`-`) of the hook. Entry 1 is the corner,
//! so the first sign is always `+`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::laurent::{quantum_integer, LaurentPoly, RationalFn};
use crate::{Error, Result};

/// Largest supported strand count for sign sequences.
pub const MAX_SIGNS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A sequence of at most 64 signs; bit `i` of `minus` is set when position
/// `i + 1` carries `-`.
///
/// Ordered lexicographically with `+ < -` (shorter sequences first).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SignSequence {
    minus: u64,
    len: u8,
}

impl SignSequence {
    /// Any sequence of signs; hook validity is checked where it matters.
    pub fn new(signs: &[Sign]) -> Result<Self> {
        if signs.is_empty() || signs.len() > MAX_SIGNS {
            return Err(Error::InvalidSignSequence(format!(
                "length {} outside 1..={MAX_SIGNS}",
                signs.len()
            )));
        }
        let minus = signs
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Sign::Minus)
            .fold(0u64, |m, (i, _)| m | (1 << i));
        Ok(Self {
            minus,
            len: signs.len() as u8,
        })
    }

    pub(crate) fn from_bits(minus: u64, len: usize) -> Self {
        debug_assert!((1..=MAX_SIGNS).contains(&len));
        Self {
            minus,
            len: len as u8,
        }
    }

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }

    /// Sign at 1-based position `pos`.
    pub fn get(self, pos: usize) -> Sign {
        debug_assert!(pos >= 1 && pos <= self.len());
        if self.minus >> (pos - 1) & 1 == 1 {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn signs(self) -> impl Iterator<Item = Sign> {
        (1..=self.len()).map(move |p| self.get(p))
    }

    /// `s_r eps`: exchange positions `r` and `r + 1`.
    pub fn swap(self, r: usize) -> Self {
        debug_assert!(r >= 1 && r < self.len());
        let a = self.minus >> (r - 1) & 1;
        let b = self.minus >> r & 1;
        if a == b {
            return self;
        }
        Self {
            minus: self.minus ^ (0b11 << (r - 1)),
            len: self.len,
        }
    }

    pub fn minus_count(self) -> usize {
        self.minus.count_ones() as usize
    }

    /// `<eps>`, the product of all signs.
    pub fn sign_product(self) -> i64 {
        if self.minus_count().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Valid basis label: first sign `+`.
    pub fn is_hook_label(self) -> bool {
        self.get(1) == Sign::Plus
    }

    fn lex_key(self) -> u64 {
        // position 1 becomes the most significant bit
        let n = self.len();
        self.minus.reverse_bits() >> (64 - n)
    }
}

impl Ord for SignSequence {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.lex_key().cmp(&other.lex_key()))
    }
}

impl PartialOrd for SignSequence {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in self.signs() {
            f.write_str(if s == Sign::Plus { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignSequence({self})")
    }
}

/// Parses strings over `+`/`-`; the Unicode minus sign is accepted too.
impl FromStr for SignSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .chars()
            .map(|c| match c {
                '+' => Ok(Sign::Plus),
                '-' | '\u{2212}' => Ok(Sign::Minus),
                _ => Err(Error::InvalidSignSequence(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(&signs)
    }
}

/// The hook partition `(n - leg, 1^leg)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookShape {
    n: usize,
    leg: usize,
}

impl HookShape {
    pub fn new(n: usize, leg: usize) -> Result<Self> {
        if n == 0 || n > MAX_SIGNS || leg >= n {
            return Err(Error::LegOutOfRange { n, leg });
        }
        Ok(Self { n, leg })
    }

    pub fn n(self) -> usize {
        self.n
    }

    pub fn leg(self) -> usize {
        self.leg
    }

    pub fn partition(self) -> Vec<usize> {
        let mut p = vec![self.n - self.leg];
        p.extend(std::iter::repeat_n(1, self.leg));
        p
    }

    /// Dimension `C(n - 1, leg)` of the module.
    pub fn dimension(self) -> usize {
        binomial(self.n - 1, self.leg)
    }

    pub fn basis(self) -> Vec<SignSequence> {
        enumerate_sign_sequences(self.n, self.leg).expect("shape already validated")
    }

    pub fn contains(self, eps: SignSequence) -> bool {
        eps.len() == self.n && eps.is_hook_label() && eps.minus_count() == self.leg
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All sign sequences of length `n` starting with `+` and having exactly
/// `leg` minus signs, in lexicographic order with `+` before `-`.
pub fn enumerate_sign_sequences(n: usize, leg: usize) -> Result<Vec<SignSequence>> {
    HookShape::new(n, leg)?;
    let mut out = Vec::with_capacity(binomial(n - 1, leg));
    fn go(pos: usize, n: usize, left: usize, bits: u64, out: &mut Vec<SignSequence>) {
        if pos == n {
            out.push(SignSequence::from_bits(bits, n));
            return;
        }
        if n - pos > left {
            go(pos + 1, n, left, bits, out);
        }
        if left > 0 {
            go(pos + 1, n, left - 1, bits | (1 << pos), out);
        }
    }
    go(1, n, leg, 0, &mut out);
    Ok(out)
}

/// A standard Young tableau, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks shape (weakly decreasing nonempty rows), content (`1..=n` once
    /// each), and standardness.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidTableau(msg.to_string()));
        if rows.is_empty() || rows.iter().any(|r| r.is_empty()) {
            return bad("empty row");
        }
        if rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return bad("row lengths must weakly decrease");
        }
        let n: usize = rows.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || std::mem::replace(&mut seen[x], true) {
                return bad("entries must be 1..=n, each once");
            }
        }
        for (a, row) in rows.iter().enumerate() {
            for (b, &x) in row.iter().enumerate() {
                if b > 0 && row[b - 1] >= x {
                    return bad("rows must increase");
                }
                if a > 0 && rows[a - 1][b] >= x {
                    return bad("columns must increase");
                }
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_hook(&self) -> bool {
        self.rows.iter().skip(1).all(|r| r.len() == 1)
    }

    /// (row, column), 0-based, of the box containing each entry `1..=n`.
    fn positions(&self) -> Vec<(usize, usize)> {
        let mut pos = vec![(0, 0); self.size()];
        for (a, row) in self.rows.iter().enumerate() {
            for (b, &x) in row.iter().enumerate() {
                pos[x - 1] = (a, b);
            }
        }
        pos
    }

    /// Residues `column - row` read off box coordinates.
    pub fn residues(&self) -> Vec<i64> {
        self.positions()
            .into_iter()
            .map(|(a, b)| b as i64 - a as i64)
            .collect()
    }

    /// The tableau with entries `r` and `r + 1` exchanged, if still standard.
    pub fn swap_entries(&self, r: usize) -> Option<StandardTableau> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&x| match x {
                        x if x == r => r + 1,
                        x if x == r + 1 => r,
                        x => x,
                    })
                    .collect()
            })
            .collect();
        StandardTableau::new(rows).ok()
    }
}

/// Places 1 in the corner, then each `r` at the end of the first row for
/// `+` or at the bottom of the first column for `-`.
pub fn tableau_from_signs(eps: SignSequence) -> Result<StandardTableau> {
    if !eps.is_hook_label() {
        return Err(Error::InvalidSignSequence(format!(
            "{eps}: first sign must be +"
        )));
    }
    let mut rows = vec![vec![1]];
    for r in 2..=eps.len() {
        match eps.get(r) {
            Sign::Plus => rows[0].push(r),
            Sign::Minus => rows.push(vec![r]),
        }
    }
    StandardTableau::new(rows)
}

pub fn signs_from_tableau(t: &StandardTableau) -> Result<SignSequence> {
    if !t.is_hook() {
        return Err(Error::NonHookShape);
    }
    let signs: Vec<Sign> = t
        .positions()
        .into_iter()
        .map(|(a, _)| if a == 0 { Sign::Plus } else { Sign::Minus })
        .collect();
    SignSequence::new(&signs)
}

/// Residues by the four-case recurrence on adjacent signs, starting at 0.
pub fn residue_sequence(eps: SignSequence) -> Result<Vec<i64>> {
    if !eps.is_hook_label() {
        return Err(Error::InvalidSignSequence(format!(
            "{eps}: first sign must be +"
        )));
    }
    let mut out = vec![0i64];
    for r in 1..eps.len() {
        let i = out[r - 1];
        let step = match (eps.get(r), eps.get(r + 1)) {
            (Sign::Plus, Sign::Plus) => 1,
            (Sign::Minus, Sign::Minus) => -1,
            (Sign::Minus, Sign::Plus) => r as i64,
            (Sign::Plus, Sign::Minus) => -(r as i64),
        };
        out.push(i + step);
    }
    Ok(out)
}

fn check_index(r: usize, eps: SignSequence) -> Result<()> {
    if r == 0 || r >= eps.len() {
        return Err(Error::IndexOutOfRange {
            index: r,
            strands: eps.len(),
        });
    }
    Ok(())
}

fn over_quantum(num: LaurentPoly, r: usize) -> RationalFn {
    RationalFn::new(num, quantum_integer(r as i64)).expect("[r] is nonzero for r >= 1")
}

/// Diagonal coefficient of `H_r` on `x_eps`.
pub fn coeff_a(r: usize, eps: SignSequence) -> Result<RationalFn> {
    check_index(r, eps)?;
    let r_exp = r as i64;
    Ok(match (eps.get(r), eps.get(r + 1)) {
        (Sign::Plus, Sign::Plus) => LaurentPoly::v().into(),
        (Sign::Minus, Sign::Minus) => LaurentPoly::monomial(-1, -1).into(),
        (Sign::Minus, Sign::Plus) => over_quantum(LaurentPoly::v_pow(r_exp), r),
        (Sign::Plus, Sign::Minus) => over_quantum(LaurentPoly::monomial(-1, -r_exp), r),
    })
}

/// Off-diagonal coefficient: `H_r x_eps` has `b_r(eps) x_{s_r eps}`.
pub fn coeff_b(r: usize, eps: SignSequence) -> Result<RationalFn> {
    check_index(r, eps)?;
    let r_i = r as i64;
    Ok(match (eps.get(r), eps.get(r + 1)) {
        (Sign::Minus, Sign::Plus) => over_quantum(quantum_integer(r_i + 1), r),
        (Sign::Plus, Sign::Minus) => over_quantum(quantum_integer(r_i - 1), r),
        _ => RationalFn::zero(),
    })
}

/// Diagonal coefficient of `H_r^-1`: the bar of [`coeff_a`].
pub fn coeff_a_bar(r: usize, eps: SignSequence) -> Result<RationalFn> {
    Ok(coeff_a(r, eps)?.bar())
}

/// General semi-normal coefficients from residues:
/// `a = (v - v^-1) / (1 - v^(2(i_r - i_{r+1})))`, `b = v^-1 + a`.
pub fn general_coeffs(t: &StandardTableau, r: usize) -> Result<(RationalFn, RationalFn)> {
    let res = t.residues();
    if r == 0 || r >= res.len() {
        return Err(Error::IndexOutOfRange {
            index: r,
            strands: res.len(),
        });
    }
    let diff = res[r - 1] - res[r];
    if diff == 0 {
        return Err(Error::EqualResidues(r));
    }
    let num = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let den = &LaurentPoly::one() - &LaurentPoly::v_pow(2 * diff);
    let a = RationalFn::new(num, den)?;
    let b = &RationalFn::from(LaurentPoly::v_pow(-1)) + &a;
    Ok((a, b))
}
