//! Deliberately naive reference implementations.
//!
//! These exist to cross-check the optimized routines, so they share no
//! code and no strategy with them: [`oracle_is_bh`] enumerates every
//! h-multiset of the set and groups sums in a map, with no pruning and
//! no incremental state, and [`oracle_greedy`] re-certifies the whole
//! prefix from scratch at every candidate. Slow on purpose; never a
//! wrong answer. An explicit enumeration cap keeps the cost visible:
//! inputs whose multiset count exceeds it are refused with a resource
//! error rather than silently taking hours.

use std::collections::BTreeMap;

use crate::error::{checked_sum, Error, Result};
use crate::set::{IntegerSet, Order};
use crate::sumset::{binomial_saturating, BhVerdict, CollisionWitness, Representation};

/// Largest multiset count [`oracle_is_bh`] will enumerate.
pub const DEFAULT_ENUMERATION_CAP: u128 = 10_000_000;

/// [`oracle_is_bh_capped`] with the default cap.
pub fn oracle_is_bh(a: &IntegerSet, h: Order) -> Result<BhVerdict> {
    oracle_is_bh_capped(a, h, DEFAULT_ENUMERATION_CAP)
}

/// Certifies by brute force: walks all C(k + h - 1, h) nondecreasing
/// h-tuples, records the first two tuples seen per sum, and reports the
/// smallest sum reached twice. Refuses up front when the tuple count
/// exceeds `cap`.
pub fn oracle_is_bh_capped(a: &IntegerSet, h: Order, cap: u128) -> Result<BhVerdict> {
    let tuples = binomial_saturating(a.len() as u128 + h.get() as u128 - 1, h.get() as u128);
    if tuples > cap {
        return Err(Error::ResourceLimit {
            required: tuples,
            cap,
        });
    }
    let mut seen: BTreeMap<u128, (Vec<u128>, Option<Vec<u128>>)> = BTreeMap::new();
    let mut stack = Vec::with_capacity(h.as_usize());
    record_tuples(a.elements(), 0, h.get(), 0, &mut stack, &mut seen)?;
    for (n, (first, second)) in seen {
        if let Some(second) = second {
            return Ok(BhVerdict::Refuted(CollisionWitness::new(
                n,
                Representation::new(first, n),
                Representation::new(second, n),
            )));
        }
    }
    Ok(BhVerdict::Certified)
}

fn record_tuples(
    elements: &[u128],
    start: usize,
    remaining: u32,
    sum: u128,
    stack: &mut Vec<u128>,
    seen: &mut BTreeMap<u128, (Vec<u128>, Option<Vec<u128>>)>,
) -> Result<()> {
    if remaining == 0 {
        match seen.get_mut(&sum) {
            None => {
                seen.insert(sum, (stack.clone(), None));
            }
            Some((_, second @ None)) => {
                *second = Some(stack.clone());
            }
            // Two representations already prove the collision; tuples
            // arrive in lexicographic order, so the stored pair is the
            // smallest.
            Some((_, Some(_))) => {}
        }
        return Ok(());
    }
    let total = stack.len() as u32 + remaining;
    for (i, &e) in elements.iter().enumerate().skip(start) {
        let next_sum = checked_sum(sum, e, total)?;
        stack.push(e);
        record_tuples(elements, i, remaining - 1, next_sum, stack, seen)?;
        stack.pop();
    }
    Ok(())
}

/// Greedy B_h construction by brute force: starts from {0} and admits
/// each least candidate whose addition still certifies under
/// [`oracle_is_bh`]. Returns 1 + `count` elements.
pub fn oracle_greedy(h: Order, count: u32) -> Result<IntegerSet> {
    let mut elements: Vec<u128> = vec![0];
    for _ in 0..count {
        let mut candidate = next_value(*elements.last().unwrap())?;
        loop {
            let mut trial = elements.clone();
            trial.push(candidate);
            let trial = IntegerSet::new(trial).expect("candidates grow strictly");
            if oracle_is_bh(&trial, h)?.is_certified() {
                elements.push(candidate);
                break;
            }
            candidate = next_value(candidate)?;
        }
    }
    Ok(IntegerSet::new(elements).expect("built in increasing order"))
}

fn next_value(value: u128) -> Result<u128> {
    value.checked_add(1).ok_or_else(|| Error::Overflow {
        context: "the candidate scan".to_string(),
    })
}
