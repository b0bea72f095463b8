//! Sumsets, representation counting, and B_h certification.
//!
//! The h-fold sumset hA is the set of all sums of exactly h not
//! necessarily distinct elements of A. A representation of n is a
//! nondecreasing h-tuple of elements summing to n (permuted orderings
//! count once). A is a B_h-set when no integer has two distinct
//! representations; for a finite k-element set this is equivalent to
//! card(hA) = C(k + h - 1, h), the number of h-multisets.
//!
//! Certification answers are [`BhVerdict`]s: either `Certified` or
//! `Refuted` with a concrete [`CollisionWitness`] pair that any third
//! party can re-add and check.

use crate::error::{checked_sum, Error, Result};
use crate::set::{IntegerSet, Order};

/// A nondecreasing h-tuple of set elements together with its sum.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Representation {
    parts: Vec<u128>,
    sum: u128,
}

impl Representation {
    pub(crate) fn new(parts: Vec<u128>, sum: u128) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        debug_assert_eq!(
            parts.iter().try_fold(0u128, |acc, &p| acc.checked_add(p)),
            Some(sum)
        );
        Representation { parts, sum }
    }

    pub fn parts(&self) -> &[u128] {
        &self.parts
    }

    pub fn sum(&self) -> u128 {
        self.sum
    }
}

impl std::fmt::Display for Representation {
    /// `+`-joined decimal parts, e.g. `1+1+7`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, "+")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// Two distinct representations of the same integer: a checkable proof
/// that a set is not a B_h-set. The pair is stored with `first`
/// lexicographically before `second`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollisionWitness {
    n: u128,
    first: Representation,
    second: Representation,
}

impl CollisionWitness {
    pub(crate) fn new(n: u128, a: Representation, b: Representation) -> Self {
        assert_eq!(a.sum(), n);
        assert_eq!(b.sum(), n);
        assert_ne!(a.parts(), b.parts(), "witness representations must differ");
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        CollisionWitness { n, first, second }
    }

    pub fn n(&self) -> u128 {
        self.n
    }

    pub fn first(&self) -> &Representation {
        &self.first
    }

    pub fn second(&self) -> &Representation {
        &self.second
    }
}

impl std::fmt::Display for CollisionWitness {
    /// `n = p1+..+ph = q1+..+qh`, e.g. `3 = 0+0+3 = 1+1+1`.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} = {} = {}", self.n, self.first, self.second)
    }
}

/// Outcome of a B_h certification. A refutation always carries a valid
/// witness; a certification never does, by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BhVerdict {
    Certified,
    Refuted(CollisionWitness),
}

impl BhVerdict {
    pub fn is_certified(&self) -> bool {
        matches!(self, BhVerdict::Certified)
    }

    pub fn witness(&self) -> Option<&CollisionWitness> {
        match self {
            BhVerdict::Certified => None,
            BhVerdict::Refuted(w) => Some(w),
        }
    }
}

/// Exact binomial coefficient C(n, k) in checked 128-bit arithmetic.
/// C(n, k) = 0 for k > n.
pub fn binomial(n: u128, k: u128) -> Result<u128> {
    if k > n {
        return Ok(0);
    }
    let reduced = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=reduced {
        // acc holds C(n-reduced+i-1, i-1); one multiplicative step keeps
        // every intermediate an exact sub-binomial, so a checked_mul
        // failure means the final value itself exceeds 128 bits.
        let num = n - reduced + i;
        let g = gcd(acc, i);
        let denom = i / g;
        debug_assert_eq!(num % denom, 0);
        acc = (acc / g)
            .checked_mul(num / denom)
            .ok_or_else(|| Error::Overflow {
                context: format!("binomial({n}, {k})"),
            })?;
    }
    Ok(acc)
}

/// Binomial for guard predicates: saturates to `u128::MAX` instead of
/// erroring, so "too big to even compute" compares as over any cap.
pub(crate) fn binomial_saturating(n: u128, k: u128) -> u128 {
    binomial(n, k).unwrap_or(u128::MAX)
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// The h-fold sumset hA: every value expressible as a sum of exactly h
/// elements of A with repetition, sorted and duplicate-free. Empty A
/// gives an empty result; h = 1 gives A itself.
pub fn h_fold_sumset(a: &IntegerSet, h: Order) -> Result<IntegerSet> {
    if a.is_empty() {
        return Ok(IntegerSet::empty());
    }
    let mut current: Vec<u128> = a.elements().to_vec();
    for m in 2..=h.get() {
        let mut next = Vec::with_capacity(current.len() * a.len());
        for &s in &current {
            for e in a.iter() {
                next.push(checked_sum(s, e, m)?);
            }
        }
        next.sort_unstable();
        next.dedup();
        current = next;
    }
    Ok(IntegerSet::from_sorted_unchecked(current))
}

/// Calls `visit` once per nondecreasing h-tuple of elements of `a`
/// summing to `n`, in lexicographic order, until `visit` returns
/// `false`.
fn for_each_representation(
    a: &IntegerSet,
    h: Order,
    n: u128,
    visit: &mut impl FnMut(&[u128]) -> bool,
) {
    if a.is_empty() {
        return;
    }
    let elements = a.elements();
    let mut stack = Vec::with_capacity(h.as_usize());
    descend(elements, 0, h.get(), n, &mut stack, visit);
}

fn descend(
    elements: &[u128],
    start: usize,
    remaining: u32,
    target: u128,
    stack: &mut Vec<u128>,
    visit: &mut impl FnMut(&[u128]) -> bool,
) -> bool {
    if remaining == 0 {
        return if target == 0 { visit(stack) } else { true };
    }
    let slots = remaining as u128;
    // Even all-maximal parts cannot reach the target from here.
    if elements[elements.len() - 1].saturating_mul(slots) < target {
        return true;
    }
    for (i, &e) in elements.iter().enumerate().skip(start) {
        // Parts are nondecreasing, so e is a lower bound on every
        // remaining slot; once e*slots passes the target no later
        // element can work either.
        if e.saturating_mul(slots) > target {
            break;
        }
        stack.push(e);
        let keep_going = descend(elements, i, remaining - 1, target - e, stack, visit);
        stack.pop();
        if !keep_going {
            return false;
        }
    }
    true
}

/// All representations of `n` as nondecreasing h-tuples over `a`, in
/// lexicographic order. Out-of-range `n` simply yields an empty list.
pub fn representations(a: &IntegerSet, h: Order, n: u128) -> Vec<Representation> {
    let mut out = Vec::new();
    for_each_representation(a, h, n, &mut |parts| {
        out.push(Representation::new(parts.to_vec(), n));
        true
    });
    out
}

/// The lexicographically least representation only, abandoning the
/// search tree as soon as it completes one tuple.
pub(crate) fn first_representation(a: &IntegerSet, h: Order, n: u128) -> Option<Representation> {
    let mut out = None;
    for_each_representation(a, h, n, &mut |parts| {
        out = Some(Representation::new(parts.to_vec(), n));
        false
    });
    out
}

/// The representation function r_{h,A}(n): how many distinct
/// representations `n` has. Always equals `representations(a, h, n).len()`.
pub fn rep_count(a: &IntegerSet, h: Order, n: u128) -> u128 {
    let mut count: u128 = 0;
    for_each_representation(a, h, n, &mut |_| {
        count += 1;
        true
    });
    count
}

/// Certifies whether `a` is a B_h-set.
///
/// The certified answer comes from the multiset-count criterion:
/// card(hA) = C(k + h - 1, h) exactly when every sum is reached once.
/// On a cardinality deficit the refutation reports the smallest
/// colliding n with its two lexicographically smallest representations,
/// so refutations are deterministic and reproducible.
pub fn is_bh(a: &IntegerSet, h: Order) -> Result<BhVerdict> {
    let k = a.len() as u128;
    let expected = binomial(k + h.get() as u128 - 1, h.get() as u128)?;
    let sumset = h_fold_sumset(a, h)?;
    if sumset.len() as u128 == expected {
        return Ok(BhVerdict::Certified);
    }
    for n in sumset.iter() {
        let mut pair = Vec::with_capacity(2);
        for_each_representation(a, h, n, &mut |parts| {
            pair.push(Representation::new(parts.to_vec(), n));
            pair.len() < 2
        });
        if pair.len() == 2 {
            let second = pair.pop().unwrap();
            let first = pair.pop().unwrap();
            return Ok(BhVerdict::Refuted(CollisionWitness::new(n, first, second)));
        }
    }
    unreachable!("cardinality deficit implies some sum has two representations")
}
