//! The state-sum for the Alexander polynomial.
//!
//! Each crossing of the braid diagram is resolved either as two vertical
//! strands ([`Choice::Identity`]) or as a plain crossing ([`Choice::Swap`]).
//! A resolution is admissible when no swap touches the leftmost strand and
//! the resulting permutation is the identity. A state adds a sign to every
//! strand, `+` on the leftmost one, such that every swap joins strands of
//! opposite sign. Its weight is the product of one local scalar per crossing,
//! looked up from the crossing sign, the resolution, and the two strand signs
//! just below the crossing. Then
//!
//! `A(w) = (1/[n]) * sum over states of <eps> * weight`.
//!
//! [`state_sum`] enumerates states exhaustively. [`evaluate_dp`] computes the
//! same number by pushing sign-sequence amplitudes up the diagram, and scales
//! to long words.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidLetter, BraidWord, CrossingSign};
use crate::hook::{Sign, SignSequence};
use crate::laurent::{quantum_integer, LaurentPoly, PolyJson, RationalFn};
use crate::{Error, Result};

/// Limits for the exhaustive routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBounds {
    pub max_letters: usize,
    pub max_strands: usize,
}

impl Default for EnumBounds {
    fn default() -> Self {
        Self {
            max_letters: 16,
            max_strands: 6,
        }
    }
}

impl EnumBounds {
    pub fn check(&self, w: &BraidWord) -> Result<()> {
        if w.len() > self.max_letters || w.strands() > self.max_strands {
            return Err(Error::BoundExceeded {
                letters: w.len(),
                strands: w.strands(),
                max_letters: self.max_letters,
                max_strands: self.max_strands,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Choice {
    Identity,
    Swap,
}

/// One choice per letter, in reading order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Resolution(pub Vec<Choice>);

/// `0` for identity, `1` for swap, letter 1 first.
impl fmt::Display for Resolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            f.write_str(if *c == Choice::Swap { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A state: an admissible resolution and the strand signs along the bottom
/// of the diagram.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    pub resolution: Resolution,
    pub signs: SignSequence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedState {
    pub state: State,
    pub weight: RationalFn,
    pub sign_product: i64,
}

/// The local picture at a crossing, named by the signs `(left, right)` below it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LocalKind {
    PlusPlus,
    MinusMinus,
    MinusPlus,
    PlusMinus,
    SwapMinusPlus,
    SwapPlusMinus,
}

/// The scalar contributed by one resolved crossing at positions `r, r+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub kind: LocalKind,
    pub r: usize,
    pub crossing: CrossingSign,
}

impl Scalar {
    pub fn new(letter: BraidLetter, choice: Choice, below: (Sign, Sign)) -> Option<Self> {
        use LocalKind::*;
        let kind = match (choice, below) {
            (Choice::Identity, (Sign::Plus, Sign::Plus)) => PlusPlus,
            (Choice::Identity, (Sign::Minus, Sign::Minus)) => MinusMinus,
            (Choice::Identity, (Sign::Minus, Sign::Plus)) => MinusPlus,
            (Choice::Identity, (Sign::Plus, Sign::Minus)) => PlusMinus,
            (Choice::Swap, (Sign::Minus, Sign::Plus)) => SwapMinusPlus,
            (Choice::Swap, (Sign::Plus, Sign::Minus)) => SwapPlusMinus,
            (Choice::Swap, _) => return None,
        };
        Some(Self {
            kind,
            r: letter.index,
            crossing: letter.sign,
        })
    }

    /// `+1` for a positive crossing, `-1` for a negative one: the sign of the
    /// `v` exponents in the table.
    fn orient(&self) -> i64 {
        self.crossing.value()
    }

    pub fn value(&self) -> RationalFn {
        use LocalKind::*;
        let r = self.r as i64;
        let o = self.orient();
        let over_r = |num: LaurentPoly| {
            RationalFn::new(num, quantum_integer(r)).expect("[r] is nonzero for r >= 1")
        };
        match self.kind {
            PlusPlus => LaurentPoly::v_pow(o).into(),
            MinusMinus => LaurentPoly::monomial(-1, -o).into(),
            MinusPlus => over_r(LaurentPoly::v_pow(o * r)),
            PlusMinus => over_r(LaurentPoly::monomial(-1, -o * r)),
            SwapMinusPlus => over_r(quantum_integer(r + 1)),
            SwapPlusMinus => over_r(quantum_integer(r - 1)),
        }
    }

    /// `[r] * value()`, always a Laurent polynomial.
    pub fn scaled_value(&self) -> LaurentPoly {
        use LocalKind::*;
        let r = self.r as i64;
        let o = self.orient();
        match self.kind {
            PlusPlus => LaurentPoly::v_pow(o) * quantum_integer(r),
            MinusMinus => LaurentPoly::monomial(-1, -o) * quantum_integer(r),
            MinusPlus => LaurentPoly::v_pow(o * r),
            PlusMinus => LaurentPoly::monomial(-1, -o * r),
            SwapMinusPlus => quantum_integer(r + 1),
            SwapPlusMinus => quantum_integer(r - 1),
        }
    }
}

fn v_power_text(e: i64) -> String {
    match e {
        0 => "1".into(),
        1 => "v".into(),
        e => format!("v^{e}"),
    }
}

/// Symbolic form as in the scalar table, e.g. `-v^-2/[2]` or `[3]/[2]`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use LocalKind::*;
        let r = self.r as i64;
        let o = self.orient();
        let over = |num: String| {
            if r == 1 {
                num
            } else {
                format!("{num}/[{r}]")
            }
        };
        let text = match self.kind {
            PlusPlus => v_power_text(o),
            MinusMinus => format!("-{}", v_power_text(-o)),
            MinusPlus => over(v_power_text(o * r)),
            PlusMinus => over(format!("-{}", v_power_text(-o * r))),
            SwapMinusPlus => format!("[{}]/[{r}]", r + 1),
            SwapPlusMinus => format!("[{}]/[{r}]", r - 1),
        };
        f.write_str(&text)
    }
}

/// Walks the diagram bottom to top and returns the scalar at each letter,
/// in reading order. `None` if a swap joins equal signs or the signs do not
/// close up.
fn walk(w: &BraidWord, resolution: &Resolution, signs: SignSequence) -> Option<Vec<Scalar>> {
    let letters = w.letters();
    let mut cur = signs;
    let mut out = vec![None; letters.len()];
    for (k, letter) in letters.iter().enumerate().rev() {
        let r = letter.index;
        let choice = resolution.0[k];
        out[k] = Some(Scalar::new(*letter, choice, (cur.get(r), cur.get(r + 1)))?);
        if choice == Choice::Swap {
            cur = cur.swap(r);
        }
    }
    (cur == signs).then(|| out.into_iter().map(Option::unwrap).collect())
}

/// All resolutions satisfying P1 (no swap at index 1) and P2 (identity
/// permutation), ordered by choice vector.
fn admissible_resolutions(w: &BraidWord) -> Vec<Resolution> {
    let letters = w.letters();
    let n = w.strands();
    let mut out = Vec::new();
    let mut choices = vec![Choice::Identity; letters.len()];
    // strand id at each position, bottom to top
    let mut at: Vec<usize> = (0..n).collect();
    fn go(
        k: usize,
        letters: &[BraidLetter],
        choices: &mut Vec<Choice>,
        at: &mut Vec<usize>,
        out: &mut Vec<Resolution>,
    ) {
        if k == 0 {
            if at.iter().enumerate().all(|(p, s)| p == *s) {
                out.push(Resolution(choices.clone()));
            }
            return;
        }
        let idx = k - 1;
        let r = letters[idx].index;
        choices[idx] = Choice::Identity;
        go(idx, letters, choices, at, out);
        if r >= 2 {
            choices[idx] = Choice::Swap;
            at.swap(r - 1, r);
            go(idx, letters, choices, at, out);
            at.swap(r - 1, r);
            choices[idx] = Choice::Identity;
        }
    }
    go(letters.len(), letters, &mut choices, &mut at, &mut out);
    out.sort();
    out
}

/// Every state of `w`, ordered by resolution, then by sign string.
pub fn enumerate_states(w: &BraidWord, bounds: &EnumBounds) -> Result<Vec<State>> {
    bounds.check(w)?;
    let n = w.strands();
    let mut states = Vec::new();
    for resolution in admissible_resolutions(w) {
        let mut signs: Vec<SignSequence> = (0..1u64 << (n - 1))
            .map(|free| SignSequence::from_bits(free << 1, n))
            .collect();
        signs.sort();
        for eps in signs {
            if walk(w, &resolution, eps).is_some() {
                states.push(State {
                    resolution: resolution.clone(),
                    signs: eps,
                });
            }
        }
    }
    Ok(states)
}

/// The local scalars of a state, in reading order.
pub fn state_factors(w: &BraidWord, s: &State) -> Result<Vec<Scalar>> {
    let not_a_state =
        || Error::InvalidSignSequence(format!("({}, {}) is not a state", s.resolution, s.signs));
    if s.resolution.0.len() != w.len() || s.signs.len() != w.strands() || !s.signs.is_hook_label() {
        return Err(not_a_state());
    }
    let first_strand_swapped = w
        .letters()
        .iter()
        .zip(&s.resolution.0)
        .any(|(l, c)| l.index == 1 && *c == Choice::Swap);
    if first_strand_swapped {
        return Err(not_a_state());
    }
    let mut at: Vec<usize> = (0..w.strands()).collect();
    for (l, c) in w.letters().iter().zip(&s.resolution.0).rev() {
        if *c == Choice::Swap {
            at.swap(l.index - 1, l.index);
        }
    }
    if at.iter().enumerate().any(|(p, s)| p != *s) {
        return Err(not_a_state());
    }
    walk(w, &s.resolution, s.signs).ok_or_else(not_a_state)
}

/// `M(w, x, eps)`, the product of the local scalars.
pub fn state_weight(w: &BraidWord, s: &State) -> Result<RationalFn> {
    Ok(state_factors(w, s)?
        .iter()
        .fold(RationalFn::one(), |acc, f| &acc * &f.value()))
}

pub fn weighted_states(w: &BraidWord, bounds: &EnumBounds) -> Result<Vec<WeightedState>> {
    enumerate_states(w, bounds)?
        .into_iter()
        .map(|state| {
            Ok(WeightedState {
                weight: state_weight(w, &state)?,
                sign_product: state.signs.sign_product(),
                state,
            })
        })
        .collect()
}

/// `A(w)` by exhaustive enumeration of states.
pub fn state_sum(w: &BraidWord, bounds: &EnumBounds) -> Result<LaurentPoly> {
    let total = weighted_states(w, bounds)?
        .iter()
        .fold(RationalFn::zero(), |acc, s| {
            if s.sign_product > 0 {
                &acc + &s.weight
            } else {
                &acc - &s.weight
            }
        });
    let total = total
        .to_laurent()
        .ok_or_else(|| Error::InexactDivision(format!("state total {total}")))?;
    total.exact_div(&quantum_integer(w.strands() as i64))
}

/// Per-letter transition data with every scalar multiplied by `[r]`.
struct ScaledLetter {
    r: usize,
    // indexed by (bit_r, bit_{r+1}) with bit = 1 for minus
    diag: [LaurentPoly; 4],
    swap_from_minus_plus: LaurentPoly,
    swap_from_plus_minus: LaurentPoly,
}

impl ScaledLetter {
    fn new(letter: BraidLetter) -> Self {
        let sign_of = |bit: u64| if bit == 1 { Sign::Minus } else { Sign::Plus };
        let diag = [0u64, 1, 2, 3].map(|key| {
            let below = (sign_of(key & 1), sign_of(key >> 1));
            Scalar::new(letter, Choice::Identity, below)
                .expect("identity resolution is always allowed")
                .scaled_value()
        });
        let swap = |below| {
            Scalar::new(letter, Choice::Swap, below)
                .expect("opposite signs may swap")
                .scaled_value()
        };
        Self {
            r: letter.index,
            diag,
            swap_from_minus_plus: swap((Sign::Minus, Sign::Plus)),
            swap_from_plus_minus: swap((Sign::Plus, Sign::Minus)),
        }
    }
}

fn accumulate(map: &mut HashMap<u64, LaurentPoly>, key: u64, value: LaurentPoly) {
    if value.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(slot) => {
            *slot += &value;
            if slot.is_zero() {
                map.remove(&key);
            }
        }
        None => {
            map.insert(key, value);
        }
    }
}

/// Amplitude returning to `start` after the whole word, scaled by the
/// product of `[r]` over the letters.
fn diagonal_amplitude(letters: &[ScaledLetter], start: u64) -> LaurentPoly {
    let mut amps: HashMap<u64, LaurentPoly> = HashMap::from([(start, LaurentPoly::one())]);
    for l in letters {
        let mut next = HashMap::with_capacity(amps.len() * 2);
        let lo = l.r - 1;
        for (bits, amp) in amps {
            let key = (bits >> lo & 1) | (bits >> l.r & 1) << 1;
            accumulate(&mut next, bits, &amp * &l.diag[key as usize]);
            // swaps never touch position 1
            if l.r >= 2 {
                let swapped = bits ^ (0b11 << lo);
                match key {
                    0b01 => accumulate(&mut next, swapped, &amp * &l.swap_from_minus_plus),
                    0b10 => accumulate(&mut next, swapped, &amp * &l.swap_from_plus_minus),
                    _ => {}
                }
            }
        }
        amps = next;
        if amps.is_empty() {
            break;
        }
    }
    amps.remove(&start).unwrap_or_default()
}

/// `A(w)` by propagating amplitudes over sign sequences, letter by letter.
///
/// All local scalars are multiplied by `[r]` so the propagation stays inside
/// `Z[v, v^-1]`; the accumulated factor is divided out at the end together
/// with `[n]`.
pub fn evaluate_dp(w: &BraidWord) -> Result<LaurentPoly> {
    let n = w.strands();
    if n > crate::hook::MAX_SIGNS {
        return Err(Error::InvalidSignSequence(format!(
            "{n} strands is too many"
        )));
    }
    let letters: Vec<ScaledLetter> = w
        .letters()
        .iter()
        .rev()
        .map(|l| ScaledLetter::new(*l))
        .collect();
    let scale = letters.iter().fold(quantum_integer(n as i64), |acc, l| {
        &acc * &quantum_integer(l.r as i64)
    });
    let starts: Vec<u64> = (0..1u64 << (n - 1)).map(|free| free << 1).collect();
    let signed = |start: &u64| {
        let amp = diagonal_amplitude(&letters, *start);
        if start.count_ones().is_multiple_of(2) {
            amp
        } else {
            -amp
        }
    };
    #[cfg(feature = "parallel")]
    let parts: Vec<LaurentPoly> = {
        use rayon::prelude::*;
        starts.par_iter().map(signed).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let parts: Vec<LaurentPoly> = starts.iter().map(signed).collect();
    let mut total = LaurentPoly::zero();
    for p in &parts {
        total += p;
    }
    total.exact_div(&scale)
}

/// One line of a state table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateRow {
    pub resolution: String,
    pub signs: String,
    pub sign_product: i64,
    pub weight_factors: Vec<String>,
    pub weight: RationalFn,
}

/// JSON form of a [`StateRow`]; the weight is a fraction of two
/// polynomial objects.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StateRowJson {
    pub resolution: String,
    pub signs: String,
    pub sign_product: i64,
    pub weight_factors: Vec<String>,
    pub weight: WeightJson,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    pub numerator: PolyJson,
    pub denominator: PolyJson,
    pub text: String,
}

impl From<&StateRow> for StateRowJson {
    fn from(row: &StateRow) -> Self {
        StateRowJson {
            resolution: row.resolution.clone(),
            signs: row.signs.clone(),
            sign_product: row.sign_product,
            weight_factors: row.weight_factors.clone(),
            weight: WeightJson {
                numerator: row.weight.numerator().into(),
                denominator: row.weight.denominator().into(),
                text: row.weight.to_string(),
            },
        }
    }
}

impl StateRowJson {
    pub fn weight(&self) -> Result<RationalFn> {
        RationalFn::new(
            self.weight.numerator.to_laurent()?,
            self.weight.denominator.to_laurent()?,
        )
    }
}

/// The state table: resolution, bottom signs, local scalars, and weight.
pub fn list_states(w: &BraidWord, bounds: &EnumBounds) -> Result<Vec<StateRow>> {
    enumerate_states(w, bounds)?
        .into_iter()
        .map(|s| {
            let factors = state_factors(w, &s)?;
            let weight = factors
                .iter()
                .fold(RationalFn::one(), |acc, f| &acc * &f.value());
            Ok(StateRow {
                resolution: s.resolution.to_string(),
                signs: s.signs.to_string(),
                sign_product: s.signs.sign_product(),
                weight_factors: factors.iter().map(ToString::to_string).collect(),
                weight,
            })
        })
        .collect()
}

/// Renders rows as aligned text columns.
pub fn render_state_table(rows: &[StateRow]) -> String {
    let header = ["resolution", "signs", "<e>", "factors", "weight"];
    let body: Vec<[String; 5]> = rows
        .iter()
        .map(|r| {
            [
                if r.resolution.is_empty() {
                    "-".into()
                } else {
                    r.resolution.clone()
                },
                r.signs.clone(),
                if r.sign_product > 0 {
                    "+1".into()
                } else {
                    "-1".into()
                },
                if r.weight_factors.is_empty() {
                    "1".into()
                } else {
                    r.weight_factors.join(" * ")
                },
                r.weight.to_string(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &body {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let parts: Vec<String> = cells
            .iter()
            .zip(widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(parts.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.map(String::from));
    for row in &body {
        line(row);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{markov_stabilize, parse_braid_word};

    fn word(s: &str) -> BraidWord {
        parse_braid_word(s, None).unwrap()
    }

    fn fig8_value() -> LaurentPoly {
        LaurentPoly::from_terms([(2, -1), (0, 3), (-2, -1)])
    }

    fn trefoil_value() -> LaurentPoly {
        LaurentPoly::from_terms([(2, 1), (0, -1), (-2, 1)])
    }

    #[test]
    fn figure_eight_states() {
        let states = enumerate_states(&word("-2 1 -2 1"), &EnumBounds::default()).unwrap();
        let listed: Vec<(String, String)> = states
            .iter()
            .map(|s| (s.resolution.to_string(), s.signs.to_string()))
            .collect();
        let expect = [
            ("0000", "+++"),
            ("0000", "++-"),
            ("0000", "+-+"),
            ("0000", "+--"),
            ("1010", "++-"),
            ("1010", "+-+"),
        ];
        assert_eq!(
            listed,
            expect.map(|(a, b)| (a.to_string(), b.to_string())).to_vec()
        );
    }

    #[test]
    fn small_state_sets() {
        let b = EnumBounds::default();
        let id2 = BraidWord::identity(2).unwrap();
        assert_eq!(enumerate_states(&id2, &b).unwrap().len(), 2);
        let s1 = word("1");
        let states = enumerate_states(&s1, &b).unwrap();
        assert_eq!(states.len(), 2);
        assert!(states
            .iter()
            .all(|s| s.resolution.0 == vec![Choice::Identity]));
    }

    #[test]
    fn weights_from_table() {
        let w = word("-2 1 -2 1");
        let q2sq = quantum_integer(2).pow(2);
        let s = State {
            resolution: Resolution(vec![Choice::Identity; 4]),
            signs: "++-".parse().unwrap(),
        };
        assert_eq!(
            state_weight(&w, &s).unwrap(),
            RationalFn::new(LaurentPoly::v_pow(6), q2sq.clone()).unwrap()
        );
        let s = State {
            resolution: Resolution(vec![
                Choice::Swap,
                Choice::Identity,
                Choice::Swap,
                Choice::Identity,
            ]),
            signs: "++-".parse().unwrap(),
        };
        assert_eq!(
            state_weight(&w, &s).unwrap(),
            RationalFn::new(-quantum_integer(3), q2sq).unwrap()
        );
        let factors: Vec<String> = state_factors(&w, &s)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(factors, ["[3]/[2]", "-v^-1", "[1]/[2]", "v"]);

        let id = BraidWord::identity(3).unwrap();
        let s = State {
            resolution: Resolution(vec![]),
            signs: "+-+".parse().unwrap(),
        };
        assert_eq!(state_weight(&id, &s).unwrap(), RationalFn::one());
    }

    #[test]
    fn invalid_states_rejected() {
        let w = word("-2 1 -2 1");
        let bad_swap = State {
            resolution: Resolution(vec![
                Choice::Swap,
                Choice::Identity,
                Choice::Swap,
                Choice::Identity,
            ]),
            signs: "+++".parse().unwrap(),
        };
        assert!(state_weight(&w, &bad_swap).is_err());
        let first_strand = State {
            resolution: Resolution(vec![
                Choice::Identity,
                Choice::Swap,
                Choice::Identity,
                Choice::Swap,
            ]),
            signs: "+-+".parse().unwrap(),
        };
        assert!(state_weight(&w, &first_strand).is_err());
    }

    #[test]
    fn scalar_table_text() {
        let neg2 = BraidLetter::negative(2);
        let cases = [
            (
                neg2,
                Choice::Identity,
                (Sign::Plus, Sign::Minus),
                "-v^2/[2]",
            ),
            (
                neg2,
                Choice::Identity,
                (Sign::Minus, Sign::Plus),
                "v^-2/[2]",
            ),
            (
                BraidLetter::negative(1),
                Choice::Identity,
                (Sign::Plus, Sign::Plus),
                "v^-1",
            ),
            (
                BraidLetter::positive(1),
                Choice::Identity,
                (Sign::Minus, Sign::Minus),
                "-v^-1",
            ),
            (
                BraidLetter::positive(3),
                Choice::Identity,
                (Sign::Plus, Sign::Minus),
                "-v^-3/[3]",
            ),
            (
                BraidLetter::positive(3),
                Choice::Swap,
                (Sign::Minus, Sign::Plus),
                "[4]/[3]",
            ),
        ];
        for (l, c, below, text) in cases {
            assert_eq!(Scalar::new(l, c, below).unwrap().to_string(), text);
        }
        assert!(Scalar::new(neg2, Choice::Swap, (Sign::Plus, Sign::Plus)).is_none());
    }

    #[test]
    fn scaled_values_agree() {
        for r in 1..6 {
            for sign in [CrossingSign::Positive, CrossingSign::Negative] {
                for choice in [Choice::Identity, Choice::Swap] {
                    for below in [
                        (Sign::Plus, Sign::Plus),
                        (Sign::Minus, Sign::Minus),
                        (Sign::Plus, Sign::Minus),
                        (Sign::Minus, Sign::Plus),
                    ] {
                        let Some(s) = Scalar::new(BraidLetter::new(r, sign), choice, below) else {
                            continue;
                        };
                        let rescaled = &s.value() * &RationalFn::from(quantum_integer(r as i64));
                        assert_eq!(rescaled, s.scaled_value().into());
                    }
                }
            }
        }
    }

    #[test]
    fn sums() {
        let b = EnumBounds::default();
        assert_eq!(state_sum(&word("-2 1 -2 1"), &b).unwrap(), fig8_value());
        assert_eq!(
            state_sum(&word("1 1"), &b).unwrap(),
            LaurentPoly::from_terms([(1, 1), (-1, -1)])
        );
        assert!(state_sum(&BraidWord::identity(2).unwrap(), &b)
            .unwrap()
            .is_zero());
        assert_eq!(
            state_sum(&BraidWord::identity(1).unwrap(), &b).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn dynamic_programming() {
        assert_eq!(evaluate_dp(&word("-2 1 -2 1")).unwrap(), fig8_value());
        assert_eq!(evaluate_dp(&word("1 1 1")).unwrap(), trefoil_value());
        let stabilized = markov_stabilize(&word("1 1 1"), CrossingSign::Positive);
        assert_eq!(evaluate_dp(&stabilized).unwrap(), trefoil_value());
        assert_eq!(
            evaluate_dp(&BraidWord::identity(1).unwrap()).unwrap(),
            LaurentPoly::one()
        );
    }

    #[test]
    fn long_word_dp() {
        // (s1 s2)^12 s1 on three strands: far beyond exhaustive bounds
        let mut letters = Vec::new();
        for _ in 0..12 {
            letters.extend([1, 2]);
        }
        letters.push(1);
        let w = BraidWord::from_signed(&letters).unwrap();
        assert!(enumerate_states(&w, &EnumBounds::default()).is_err());
        let value = evaluate_dp(&w).unwrap();
        assert_eq!(value, crate::hecke::alexander_via_trace(&w).unwrap());
        assert!(crate::laurent::to_conway(&value).is_ok());
    }

    #[test]
    fn bounds() {
        let b = EnumBounds {
            max_letters: 3,
            max_strands: 6,
        };
        assert!(matches!(
            state_sum(&word("-2 1 -2 1"), &b),
            Err(Error::BoundExceeded { letters: 4, .. })
        ));
        assert!(list_states(&word("-2 1 -2 1"), &b).is_err());
    }

    #[test]
    fn state_table_rows() {
        let b = EnumBounds::default();
        let rows = list_states(&word("-2 1 -2 1"), &b).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[1].weight_factors, ["-v^2/[2]", "v", "-v^2/[2]", "v"]);
        assert_eq!(rows[0].weight_factors, ["v^-1", "v", "v^-1", "v"]);
        let rows = list_states(&BraidWord::identity(1).unwrap(), &b).unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0].weight, RationalFn::one());
        assert_eq!(list_states(&word("1 1"), &b).unwrap().len(), 2);
        assert_eq!(
            list_states(&BraidWord::identity(3).unwrap(), &b)
                .unwrap()
                .len(),
            4
        );
        let text = render_state_table(&list_states(&word("-2 1 -2 1"), &b).unwrap());
        assert_eq!(text.lines().count(), 7);
        assert!(text.lines().nth(5).unwrap().starts_with("1010"));
    }

    #[test]
    fn row_json_round_trip() {
        let rows = list_states(&word("-2 1 -2 1"), &EnumBounds::default()).unwrap();
        for row in &rows {
            let json = serde_json::to_string(&StateRowJson::from(row)).unwrap();
            let back: StateRowJson = serde_json::from_str(&json).unwrap();
            assert_eq!(back.weight().unwrap(), row.weight);
            assert_eq!(back.signs, row.signs);
        }
    }
}
