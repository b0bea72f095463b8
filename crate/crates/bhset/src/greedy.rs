//! Incremental greedy construction of B_h-sets.
//!
//! The greedy B_h-set starts at 0 and repeatedly appends the least
//! integer that keeps the set B_h. Re-certifying from scratch at every
//! candidate is wasteful, so [`GreedyState`] carries the sum layers of
//! its prefix: layer m holds every sum of exactly m prefix elements,
//! for m = 0..=h. Because 0 is always present, layers nest upward
//! (layer m is contained in layer m+1), and a candidate c > max(A) can
//! be tested by probing shifted layers: A with c added fails B_h
//! exactly when e*c + s lands in layer h for some e in 1..=h and some
//! s in layer h-e. Admitting a candidate rebuilds each layer from the
//! previous generation in one merge pass.

use crate::error::{checked_sum, Error, Result};
use crate::set::{IntegerSet, Order};
use crate::sumset::{
    binomial_saturating, first_representation, BhVerdict, CollisionWitness, Representation,
};

/// Default ceiling on the predicted size of the top sum layer. An
/// extension that would push layer h past this bound is refused with a
/// resource error before any allocation happens.
pub const DEFAULT_LAYER_CAP: u128 = 100_000_000;

/// Largest top-layer span (h * max) mirrored into a membership bitmap.
/// 2^28 bits is 32 MiB; states spanning further fall back to binary
/// search instead of ballooning memory.
const BITMAP_SPAN_LIMIT: u128 = 1 << 28;

/// Sum layers of a set: `layer(m)` is the sorted set of sums of exactly
/// m elements with repetition, for m up to the construction order.
/// Layer 0 is always {0}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumLayers {
    layers: Vec<IntegerSet>,
}

impl SumLayers {
    fn for_zero_singleton(h: Order) -> Self {
        let layers = (0..=h.as_usize())
            .map(|_| IntegerSet::from_sorted_unchecked(vec![0]))
            .collect();
        SumLayers { layers }
    }

    pub fn layer(&self, m: usize) -> &IntegerSet {
        &self.layers[m]
    }

    /// Number of layers, i.e. the construction order plus one.
    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// A greedy construction in progress: the prefix built so far plus the
/// sum layers needed to test and admit further candidates cheaply.
#[derive(Debug, Clone)]
pub struct GreedyState {
    h: Order,
    prefix: IntegerSet,
    layers: SumLayers,
    layer_cap: u128,
    /// Dense mirror of the top layer; the candidate scan spends nearly
    /// all its time on membership probes, so layer h gets O(1) lookups
    /// whenever its span stays under [`BITMAP_SPAN_LIMIT`].
    top_bitmap: Option<Vec<u64>>,
}

impl GreedyState {
    /// Fresh construction holding only the initial element 0.
    pub fn new(h: Order) -> Self {
        GreedyState::with_layer_cap(h, DEFAULT_LAYER_CAP)
    }

    /// Fresh construction with an explicit bound on the predicted top
    /// layer size.
    pub fn with_layer_cap(h: Order, layer_cap: u128) -> Self {
        let mut state = GreedyState {
            h,
            prefix: IntegerSet::from_sorted_unchecked(vec![0]),
            layers: SumLayers::for_zero_singleton(h),
            layer_cap,
            top_bitmap: None,
        };
        state.rebuild_top_bitmap();
        state
    }

    fn rebuild_top_bitmap(&mut self) {
        let top = self.layers.layer(self.h.as_usize());
        let top_max = top.max().expect("layers are never empty");
        self.top_bitmap = (top_max < BITMAP_SPAN_LIMIT).then(|| {
            let mut words = vec![0u64; (top_max as usize >> 6) + 1];
            for value in top.iter() {
                words[(value >> 6) as usize] |= 1 << (value & 63);
            }
            words
        });
    }

    fn top_contains(&self, value: u128) -> bool {
        match &self.top_bitmap {
            Some(words) => words[(value >> 6) as usize] >> (value & 63) & 1 == 1,
            None => self.layers.layer(self.h.as_usize()).contains(value),
        }
    }

    pub fn h(&self) -> Order {
        self.h
    }

    pub fn prefix(&self) -> &IntegerSet {
        &self.prefix
    }

    pub fn layers(&self) -> &SumLayers {
        &self.layers
    }

    /// Tests whether appending `candidate` keeps the prefix a B_h-set,
    /// without modifying the state.
    ///
    /// # Panics
    ///
    /// If `candidate` does not exceed the current maximum.
    pub fn admissible(&self, candidate: u128) -> Result<BhVerdict> {
        Ok(match self.probe_collision(candidate)? {
            Some((copies, s, n)) => BhVerdict::Refuted(self.build_witness(candidate, copies, s, n)),
            None => BhVerdict::Certified,
        })
    }

    /// The probe loop behind [`GreedyState::admissible`]: appending the
    /// candidate breaks B_h exactly when some shifted lower layer meets
    /// the top layer. Stops at the first hit, returning the copy count,
    /// the lower-layer sum, and the colliding value; each shifted layer
    /// is abandoned as soon as its values pass the top stored sum.
    fn probe_collision(&self, candidate: u128) -> Result<Option<(u32, u128, u128)>> {
        let current_max = self.prefix.max().expect("prefix is never empty");
        assert!(
            candidate > current_max,
            "candidate {candidate} must exceed the current maximum {current_max}"
        );
        let h = self.h.get();
        let top_max = self
            .layers
            .layer(h as usize)
            .max()
            .expect("layers are never empty");
        for copies in 1..=h {
            let shift = (copies as u128)
                .checked_mul(candidate)
                .ok_or_else(|| Error::Overflow {
                    context: format!("{copies} copies of candidate {candidate}"),
                })?;
            if shift > top_max {
                break;
            }
            for s in self.layers.layer((h - copies) as usize).iter() {
                let value = match shift.checked_add(s) {
                    Some(v) if v <= top_max => v,
                    // Layer values ascend, so everything further is
                    // also out of reach.
                    _ => break,
                };
                if self.top_contains(value) {
                    return Ok(Some((copies, s, value)));
                }
            }
        }
        Ok(None)
    }

    /// Reconstructs the two colliding h-tuples behind a probe hit:
    /// `copies` copies of the candidate completed by a representation
    /// of `s`, against a pure-prefix representation of `n`.
    fn build_witness(&self, candidate: u128, copies: u32, s: u128, n: u128) -> CollisionWitness {
        let h = self.h.get();
        let mut parts = if copies == h {
            Vec::new()
        } else {
            let inner = Order::new(h - copies).expect("copies < h");
            first_representation(&self.prefix, inner, s)
                .expect("s was drawn from the layer of its size")
                .parts()
                .to_vec()
        };
        parts.extend(std::iter::repeat_n(candidate, copies as usize));
        let with_candidate = Representation::new(parts, n);
        let pure =
            first_representation(&self.prefix, self.h, n).expect("n was found in the top layer");
        CollisionWitness::new(n, with_candidate, pure)
    }

    /// Appends `candidate` and rebuilds every sum layer. The caller is
    /// responsible for only extending with admissible candidates; the
    /// layers stay consistent either way, but the prefix stops being a
    /// B_h-set.
    ///
    /// Predicted growth of the top layer is checked against the layer
    /// cap first, so a doomed extension fails before allocating.
    ///
    /// # Panics
    ///
    /// If `candidate` does not exceed the current maximum.
    pub fn extend(&mut self, candidate: u128) -> Result<()> {
        let current_max = self.prefix.max().expect("prefix is never empty");
        assert!(
            candidate > current_max,
            "candidate {candidate} must exceed the current maximum {current_max}"
        );
        let h = self.h.get();
        let predicted = binomial_saturating(self.prefix.len() as u128 + h as u128, h as u128);
        if predicted > self.layer_cap {
            return Err(Error::ResourceLimit {
                required: predicted,
                cap: self.layer_cap,
            });
        }
        let mut rebuilt = Vec::with_capacity(h as usize + 1);
        rebuilt.push(self.layers.layer(0).clone());
        for m in 1..=h {
            let mut merged = Vec::new();
            for copies in 0..=m {
                let shift =
                    (copies as u128)
                        .checked_mul(candidate)
                        .ok_or_else(|| Error::Overflow {
                            context: format!("{copies} copies of candidate {candidate}"),
                        })?;
                for s in self.layers.layer((m - copies) as usize).iter() {
                    merged.push(checked_sum(shift, s, m)?);
                }
            }
            merged.sort_unstable();
            merged.dedup();
            rebuilt.push(IntegerSet::from_sorted_unchecked(merged));
        }
        self.layers = SumLayers { layers: rebuilt };
        self.prefix = self.prefix.appended(candidate);
        self.rebuild_top_bitmap();
        Ok(())
    }

    /// Finds, admits, and returns the least integer above the current
    /// maximum that keeps the prefix a B_h-set. The scan is bounded:
    /// h * max + 1 is always admissible, so the loop provably stops.
    pub fn next_element(&mut self) -> Result<u128> {
        let current_max = self.prefix.max().expect("prefix is never empty");
        let bound = (self.h.get() as u128)
            .checked_mul(current_max)
            .and_then(|v| v.checked_add(1))
            .ok_or_else(|| Error::Overflow {
                context: format!("the fallback candidate h * {current_max} + 1"),
            })?;
        let mut candidate = current_max + 1;
        loop {
            if self.probe_collision(candidate)?.is_none() {
                self.extend(candidate)?;
                return Ok(candidate);
            }
            assert!(
                candidate < bound,
                "scan passed the always-admissible fallback; layer state is corrupt"
            );
            candidate += 1;
        }
    }
}

/// The first 1 + `count` terms of the greedy B_h-set, starting at 0.
pub fn greedy_prefix(h: Order, count: u32) -> Result<IntegerSet> {
    let mut state = GreedyState::new(h);
    for _ in 0..count {
        state.next_element()?;
    }
    Ok(state.prefix().clone())
}
