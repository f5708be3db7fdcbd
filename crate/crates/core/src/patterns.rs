//! Pattern vectors and the recursive pattern-basis hierarchy.
//!
//! A pattern vector is the truth table of a Boolean function on `2n` input
//! bits, flattened so that bit `i` holds `f(i)`. The rank-1 basis holds the
//! four one-hot patterns; each higher rank is built from the one below by
//! writing a member four times and negating exactly one of the copies.
//!
//! Member indices are the ones the classifier circuit measures: at rank 1
//! member `j` has bit `j` set, and at rank `n + 1` member `a * 4^n + j` is
//! member `j` of rank `n` repeated over four blocks with block `a` negated,
//! where block `k` covers the inputs whose top two bits equal `k`.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio as Rational;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Largest rank [`basis`] will build unless a caller raises the limit.
pub const DEFAULT_MAX_RANK: u32 = 8;

/// Exact non-negative rational in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio(Rational<u64>);

impl Ratio {
    pub fn new(numer: u64, denom: u64) -> Self {
        assert!(denom > 0, "ratio denominator must be positive");
        Ratio(Rational::new(numer, denom))
    }

    pub fn numer(&self) -> u64 {
        *self.0.numer()
    }

    pub fn denom(&self) -> u64 {
        *self.0.denom()
    }

    pub fn to_f64(&self) -> f64 {
        self.numer() as f64 / self.denom() as f64
    }

    pub fn checked_add(self, other: Ratio) -> Ratio {
        Ratio(self.0 + other.0)
    }

    pub fn checked_sub(self, other: Ratio) -> Option<Ratio> {
        (self.0 >= other.0).then(|| Ratio(self.0 - other.0))
    }

    pub fn half(self) -> Ratio {
        Ratio(self.0 / 2)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numer(), self.denom())
    }
}

impl fmt::Debug for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Ratio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad ratio {s:?}"));
        let (n, d) = s.split_once('/').ok_or_else(bad)?;
        let n: u64 = n.trim().parse().map_err(|_| bad())?;
        let d: u64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        Ok(Ratio::new(n, d))
    }
}

impl Serialize for Ratio {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Ratio {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Rank `n` such that `len == 4^n`, for `n >= 1`.
pub fn rank_of_len(len: usize) -> Result<u32> {
    if len >= 4 && len.is_power_of_two() && len.trailing_zeros().is_multiple_of(2) {
        Ok(len.trailing_zeros() / 2)
    } else {
        Err(Error::NotPowerOfFour(len))
    }
}

/// Truth table of a Boolean function on `2 * rank` input bits.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "BitVector", into = "BitVector")]
pub struct PatternVector {
    bits: BitVector,
    rank: u32,
}

impl PatternVector {
    pub fn new(bits: BitVector) -> Result<Self> {
        let rank = rank_of_len(bits.len())?;
        Ok(PatternVector { bits, rank })
    }

    /// Pattern whose only set bit is `position`.
    pub fn one_hot(rank: u32, position: usize) -> Self {
        let len = 1usize << (2 * rank);
        assert!(position < len);
        PatternVector {
            bits: BitVector::from_fn(len, |i| i == position),
            rank,
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// Number of input bits of the represented function.
    pub fn arity(&self) -> u32 {
        2 * self.rank
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    /// `f(x)` for the input whose integer encoding is `x`.
    #[inline]
    pub fn value_at(&self, x: usize) -> bool {
        self.bits.get(x)
    }

    pub fn count_ones(&self) -> usize {
        self.bits.count_ones()
    }

    /// Block `k` of four, covering inputs whose top two bits equal `k`.
    fn block(&self, k: usize) -> BitVector {
        let quarter = self.len() / 4;
        self.bits.slice(k * quarter, quarter)
    }
}

impl From<PatternVector> for BitVector {
    fn from(p: PatternVector) -> Self {
        p.bits
    }
}

impl TryFrom<BitVector> for PatternVector {
    type Error = Error;

    fn try_from(bits: BitVector) -> Result<Self> {
        PatternVector::new(bits)
    }
}

impl FromStr for PatternVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PatternVector::new(s.parse()?)
    }
}

impl fmt::Display for PatternVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.bits, f)
    }
}

impl fmt::Debug for PatternVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PatternVector({})", self.bits)
    }
}

/// A Boolean function given by its value on every input.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TruthTable {
    arity: u32,
    values: Vec<bool>,
}

impl TruthTable {
    /// Tabulates `f` over all `2^arity` inputs, passed as integers.
    pub fn from_fn(arity: u32, f: impl Fn(usize) -> bool) -> Self {
        assert!(arity < usize::BITS, "arity too large");
        TruthTable {
            arity,
            values: (0..1usize << arity).map(f).collect(),
        }
    }

    pub fn arity(&self) -> u32 {
        self.arity
    }

    pub fn eval_index(&self, x: usize) -> bool {
        self.values[x]
    }

    pub fn eval(&self, x: &BitVector) -> Result<bool> {
        if x.len() != self.arity as usize {
            return Err(Error::LengthMismatch {
                left: x.len(),
                right: self.arity as usize,
            });
        }
        let idx = (0..x.len()).fold(0usize, |acc, i| acc | (usize::from(x.get(i)) << i));
        Ok(self.values[idx])
    }

    /// Raw truth-table bit string, valid for any arity.
    pub fn to_bits(&self) -> BitVector {
        BitVector::from_fn(self.values.len(), |i| self.values[i])
    }

    /// Inputs on which the function is 1, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i]).collect()
    }
}

/// Pattern vector of `t`. The hierarchy only covers even arities.
pub fn pattern_of_function(t: &TruthTable) -> Result<PatternVector> {
    PatternVector::new(t.to_bits())
}

pub fn function_of_pattern(p: &PatternVector) -> TruthTable {
    TruthTable::from_fn(p.arity(), |x| p.value_at(x))
}

pub fn negate(p: &PatternVector) -> PatternVector {
    PatternVector {
        bits: !&p.bits,
        rank: p.rank,
    }
}

/// `p ^ q` is the all-ones vector.
pub fn is_equivalent(p: &PatternVector, q: &PatternVector) -> Result<bool> {
    Ok(p.bits.checked_xor(&q.bits)?.count_zeros() == 0)
}

/// `p ^ q` is balanced: the Hamming distance is half the length.
pub fn is_orthogonal(p: &PatternVector, q: &PatternVector) -> Result<bool> {
    Ok(p.bits.distance(&q.bits)? * 2 == p.len())
}

/// `min(#0, #1) / length`.
pub fn imbalance_ratio(p: &PatternVector) -> Ratio {
    let ones = p.count_ones() as u64;
    let zeros = p.len() as u64 - ones;
    Ratio::new(ones.min(zeros), p.len() as u64)
}

/// `1/2 - 1/2^(n+1)`, the imbalance ratio shared by every rank-`n` member.
pub fn imbalance_closed_form(n: u32) -> Result<Ratio> {
    if n == 0 || n > 62 {
        return Err(Error::RankOutOfRange { rank: n, max: 62 });
    }
    let half = Ratio::new(1, 2);
    Ok(half
        .checked_sub(Ratio::new(1, 1u64 << (n + 1)))
        .expect("1/2^(n+1) < 1/2"))
}

/// Iterates `rho_n = 1/4 + rho_(n-1) / 2` from `rho_1 = 1/4`.
pub fn imbalance_recurrence(n: u32) -> Result<Ratio> {
    if n == 0 || n > 62 {
        return Err(Error::RankOutOfRange { rank: n, max: 62 });
    }
    let quarter = Ratio::new(1, 4);
    Ok((1..n).fold(quarter, |rho, _| quarter.checked_add(rho.half())))
}

/// Where a pattern sits relative to a basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", content = "index")]
pub enum Membership {
    Member(usize),
    NegationOf(usize),
    Absent,
}

impl Membership {
    pub fn index(&self) -> Option<usize> {
        match *self {
            Membership::Member(i) | Membership::NegationOf(i) => Some(i),
            Membership::Absent => None,
        }
    }

    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member(_))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PatternBasis {
    rank: u32,
    members: Vec<PatternVector>,
}

impl PatternBasis {
    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member(&self, i: usize) -> Option<&PatternVector> {
        self.members.get(i)
    }

    pub fn members(&self) -> &[PatternVector] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &PatternVector> {
        self.members.iter()
    }

    /// Linear scan for `p` or its negation.
    pub fn index_of(&self, p: &PatternVector) -> Membership {
        if p.len() != 1usize << (2 * self.rank) {
            return Membership::Absent;
        }
        if let Some(i) = self.members.iter().position(|m| m == p) {
            return Membership::Member(i);
        }
        let neg = negate(p);
        match self.members.iter().position(|m| *m == neg) {
            Some(i) => Membership::NegationOf(i),
            None => Membership::Absent,
        }
    }
}

/// The rank-1 basis: member `j` is the one-hot pattern with bit `j` set.
pub fn base_basis() -> PatternBasis {
    PatternBasis {
        rank: 1,
        members: (0..4).map(|j| PatternVector::one_hot(1, j)).collect(),
    }
}

pub fn extend_basis(basis: &PatternBasis) -> PatternBasis {
    let size = basis.len();
    let mut members = Vec::with_capacity(4 * size);
    for negated_block in 0..4 {
        for p in &basis.members {
            members.push(extend_member(p, negated_block));
        }
    }
    debug_assert_eq!(members.len(), 4 * size);
    PatternBasis {
        rank: basis.rank + 1,
        members,
    }
}

fn extend_member(p: &PatternVector, negated_block: usize) -> PatternVector {
    let neg = !&p.bits;
    let blocks: [&BitVector; 4] =
        std::array::from_fn(|k| if k == negated_block { &neg } else { &p.bits });
    PatternVector {
        bits: BitVector::concat_low_first(&blocks),
        rank: p.rank + 1,
    }
}

pub fn basis(rank: u32) -> Result<PatternBasis> {
    basis_with_limit(rank, DEFAULT_MAX_RANK)
}

pub fn basis_with_limit(rank: u32, max_rank: u32) -> Result<PatternBasis> {
    if rank == 0 || rank > max_rank {
        return Err(Error::RankOutOfRange {
            rank,
            max: max_rank,
        });
    }
    let mut b = base_basis();
    for _ in 1..rank {
        b = extend_basis(&b);
    }
    Ok(b)
}

/// Member `index` of the rank-`rank` basis, built without materializing the
/// rest of the basis.
pub fn basis_member(rank: u32, index: usize) -> Result<PatternVector> {
    if rank == 0 || rank > DEFAULT_MAX_RANK {
        return Err(Error::RankOutOfRange {
            rank,
            max: DEFAULT_MAX_RANK,
        });
    }
    let size = 1usize << (2 * rank);
    if index >= size {
        return Err(Error::IndexOutOfRange { index, size });
    }
    let mut p = PatternVector::one_hot(1, index & 3);
    for level in 1..rank {
        let a = (index >> (2 * level)) & 3;
        p = extend_member(&p, a);
    }
    Ok(p)
}

/// Locates `p` in the hierarchy basis of its own rank by peeling off one
/// block level at a time. Agrees with [`PatternBasis::index_of`] on
/// `basis(p.rank())` but runs in `O(len * rank)`.
pub fn locate(p: &PatternVector) -> Membership {
    if p.rank == 1 {
        return match (p.count_ones(), p.len() - p.count_ones()) {
            (1, _) => Membership::Member(p.bits.iter().position(|b| b).unwrap()),
            (_, 1) => Membership::NegationOf(p.bits.iter().position(|b| !b).unwrap()),
            _ => Membership::Absent,
        };
    }
    let blocks: Vec<BitVector> = (0..4).map(|k| p.block(k)).collect();
    // The repeated block appears at least twice among any three.
    let base = if blocks[0] == blocks[1] || blocks[0] == blocks[2] {
        &blocks[0]
    } else {
        &blocks[1]
    };
    let odd: Vec<usize> = (0..4).filter(|&k| blocks[k] != *base).collect();
    let [a] = odd[..] else {
        return Membership::Absent;
    };
    if blocks[a] != !base {
        return Membership::Absent;
    }
    let inner = PatternVector {
        bits: base.clone(),
        rank: p.rank - 1,
    };
    let offset = a << (2 * (p.rank - 1));
    match locate(&inner) {
        Membership::Member(j) => Membership::Member(offset + j),
        Membership::NegationOf(j) => Membership::NegationOf(offset + j),
        Membership::Absent => Membership::Absent,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pv(s: &str) -> PatternVector {
        s.parse().unwrap()
    }

    #[test]
    fn base_basis_order() {
        let b = base_basis();
        let text: Vec<String> = b.iter().map(|p| p.to_string()).collect();
        assert_eq!(text, ["0001", "0010", "0100", "1000"]);
    }

    #[test]
    fn base_basis_is_orthogonal_with_quarter_ratio() {
        let b = base_basis();
        for i in 0..4 {
            assert_eq!(imbalance_ratio(&b.members[i]), Ratio::new(1, 4));
            for j in i + 1..4 {
                assert_eq!(
                    b.members[i].bits().distance(b.members[j].bits()).unwrap(),
                    2
                );
            }
        }
    }

    #[test]
    fn rank_two_members() {
        let p4 = extend_basis(&base_basis());
        assert_eq!(p4.len(), 16);
        assert_eq!(p4.members[3], pv("1000 1000 1000 0111"));
        assert_eq!(p4.members[0], pv("0001 0001 0001 1110"));
        // leftmost block negated: a = 3
        assert_eq!(p4.members[12 + 3], pv("0111 1000 1000 1000"));
        assert_eq!(p4.members[4 + 2], pv("0100 0100 1011 0100"));
    }

    #[test]
    fn rank_two_matches_listed_table() {
        // Every entry of the rank-2 listing, as a set.
        let listed = [
            "0111 1000 1000 1000",
            "1000 0111 1000 1000",
            "1000 1000 0111 1000",
            "1000 1000 1000 0111",
            "1011 0100 0100 0100",
            "0100 1011 0100 0100",
            "0100 0100 1011 0100",
            "0100 0100 0100 1011",
            "1101 0010 0010 0010",
            "0010 1101 0010 0010",
            "0010 0010 1101 0010",
            "0010 0010 0010 1101",
            "1110 0001 0001 0001",
            "0001 1110 0001 0001",
            "0001 0001 1110 0001",
            "0001 0001 0001 1110",
        ];
        let p4 = basis(2).unwrap();
        for s in listed {
            assert!(p4.index_of(&pv(s)).is_member(), "{s} missing");
        }
    }

    #[test]
    fn basis_guards() {
        assert_eq!(basis(0), Err(Error::RankOutOfRange { rank: 0, max: 8 }));
        assert_eq!(basis(9), Err(Error::RankOutOfRange { rank: 9, max: 8 }));
        assert!(basis_with_limit(3, 2).is_err());
        assert_eq!(basis(1).unwrap().len(), 4);
    }

    #[test]
    fn pattern_length_must_be_power_of_four() {
        assert_eq!(
            "00000".parse::<PatternVector>(),
            Err(Error::NotPowerOfFour(5))
        );
        assert_eq!("01".parse::<PatternVector>(), Err(Error::NotPowerOfFour(2)));
        assert_eq!(
            "0".repeat(8).parse::<PatternVector>(),
            Err(Error::NotPowerOfFour(8))
        );
        assert_eq!(pv(&"0".repeat(64)).rank(), 3);
    }

    #[test]
    fn function_pattern_duality_examples() {
        let f0 = TruthTable::from_fn(2, |x| x == 0);
        assert_eq!(pattern_of_function(&f0).unwrap(), pv("0001"));
        let zero = TruthTable::from_fn(2, |_| false);
        assert_eq!(pattern_of_function(&zero).unwrap(), pv("0000"));
        let or = TruthTable::from_fn(2, |x| x & 1 == 1 || x & 2 == 2);
        assert_eq!(pattern_of_function(&or).unwrap(), pv("1110"));

        let t = function_of_pattern(&pv("0001"));
        assert!(t.eval(&"00".parse().unwrap()).unwrap());
        assert!(!t.eval(&"01".parse().unwrap()).unwrap());
        assert!(!t.eval(&"10".parse().unwrap()).unwrap());
        assert!(!t.eval(&"11".parse().unwrap()).unwrap());
        assert!(t.eval(&"1".parse().unwrap()).is_err());

        assert_eq!(function_of_pattern(&pv("1111")).support(), vec![0, 1, 2, 3]);
        assert_eq!(
            function_of_pattern(&pv("1000 1000 1000 0111")).support(),
            vec![0, 1, 2, 7, 11, 15]
        );
    }

    #[test]
    fn odd_arity_is_raw_only() {
        let t = TruthTable::from_fn(3, |x| x == 5);
        assert_eq!(t.to_bits().to_string(), "00100000");
        assert!(pattern_of_function(&t).is_err());
    }

    #[test]
    fn negation_examples() {
        assert_eq!(negate(&pv("0001")), pv("1110"));
        assert_eq!(negate(&pv("0000")), pv("1111"));
        assert_eq!(negate(&pv("1000")), pv("0111"));
    }

    #[test]
    fn equivalence_examples() {
        assert!(is_equivalent(&pv("0001"), &pv("1110")).unwrap());
        assert!(!is_equivalent(&pv("0001"), &pv("0001")).unwrap());
        assert!(is_equivalent(&pv("1000 1000 1000 0111"), &pv("0111 0111 0111 1000")).unwrap());
        assert!(is_equivalent(&pv("0001"), &pv(&"0".repeat(16))).is_err());
    }

    #[test]
    fn orthogonality_examples() {
        assert!(is_orthogonal(&pv("1000"), &pv("0100")).unwrap());
        assert!(!is_orthogonal(&pv("1000"), &pv("1000")).unwrap());
        assert!(is_orthogonal(&pv("0001 0001 0001 1110"), &pv("0010 0010 0010 1101")).unwrap());
        assert!(is_orthogonal(&pv("1000"), &pv(&"0".repeat(16))).is_err());
    }

    #[test]
    fn imbalance_examples() {
        assert_eq!(imbalance_ratio(&pv("0001")), Ratio::new(1, 4));
        assert_eq!(imbalance_ratio(&pv("1111")).to_string(), "0/1");
        assert_eq!(
            imbalance_ratio(&pv("1000 1000 1000 0111")),
            Ratio::new(3, 8)
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(imbalance_closed_form(1).unwrap(), Ratio::new(1, 4));
        assert_eq!(imbalance_closed_form(2).unwrap(), Ratio::new(3, 8));
        assert_eq!(imbalance_closed_form(3).unwrap(), Ratio::new(7, 16));
        assert!(imbalance_closed_form(0).is_err());
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let half = Ratio::new(1, 2);
        for n in 1..=16 {
            let closed = imbalance_closed_form(n).unwrap();
            assert_eq!(imbalance_recurrence(n).unwrap(), closed, "n = {n}");
            assert!(closed < half);
        }
    }

    #[test]
    fn index_of_examples() {
        let p2 = base_basis();
        assert_eq!(p2.index_of(&pv("1000")), Membership::Member(3));
        assert_eq!(p2.index_of(&pv("0111")), Membership::NegationOf(3));
        assert_eq!(p2.index_of(&pv("1010")), Membership::Absent);
        assert_eq!(p2.index_of(&pv(&"0".repeat(16))), Membership::Absent);
    }

    #[test]
    fn locate_agrees_with_scan() {
        for rank in 1..=3 {
            let b = basis(rank).unwrap();
            for (i, m) in b.iter().enumerate() {
                assert_eq!(locate(m), Membership::Member(i));
                assert_eq!(locate(&negate(m)), Membership::NegationOf(i));
                assert_eq!(basis_member(rank, i).unwrap(), *m);
            }
        }
        assert_eq!(locate(&pv("1010")), Membership::Absent);
        assert_eq!(locate(&pv("0000")), Membership::Absent);
        assert_eq!(locate(&pv("1000 1000 1000 1000")), Membership::Absent);
        assert_eq!(locate(&pv("1000 0111 1000 0111")), Membership::Absent);
        assert_eq!(locate(&pv("1000 0100 1000 0111")), Membership::Absent);
    }

    #[test]
    fn basis_member_guards() {
        assert!(matches!(
            basis_member(1, 4),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(basis_member(0, 0).is_err());
    }

    #[test]
    fn ratio_text_round_trip() {
        let r: Ratio = "6/16".parse().unwrap();
        assert_eq!(r.to_string(), "3/8");
        assert!("3/0".parse::<Ratio>().is_err());
        assert!("3".parse::<Ratio>().is_err());
    }

    #[test]
    fn rank_one_duality_exhaustive() {
        for v in 0..16u64 {
            let p = PatternVector::new(BitVector::from_index(v, 4)).unwrap();
            assert_eq!(pattern_of_function(&function_of_pattern(&p)).unwrap(), p);
        }
    }

    fn arb_pattern(rank: u32) -> impl Strategy<Value = PatternVector> {
        let len = 1usize << (2 * rank);
        proptest::collection::vec(any::<bool>(), len)
            .prop_map(move |v| PatternVector::new(BitVector::from_fn(len, |i| v[i])).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn duality_round_trip(p in prop_oneof![arb_pattern(2), arb_pattern(3)]) {
            prop_assert_eq!(pattern_of_function(&function_of_pattern(&p)).unwrap(), p);
        }

        #[test]
        fn negation_involution(p in prop_oneof![arb_pattern(1), arb_pattern(2), arb_pattern(3)]) {
            prop_assert_eq!(negate(&negate(&p)), p.clone());
            prop_assert!(is_equivalent(&p, &negate(&p)).unwrap());
        }

        #[test]
        fn text_round_trip(p in prop_oneof![arb_pattern(1), arb_pattern(3)]) {
            prop_assert_eq!(p.to_string().parse::<PatternVector>().unwrap(), p);
        }
    }
}
