use crate::error::{Error, Result};

/// A finite set of nonnegative integers, stored as a strictly increasing
/// sequence. This is the ground type for everything else in the crate: the
/// set being certified, sumsets, and sum layers all use it.
///
/// Elements live in the 128-bit unsigned range and all arithmetic on them
/// is checked; see [`crate::error::Error::Overflow`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntegerSet {
    elements: Vec<u128>,
}

impl IntegerSet {
    /// Builds a set from a strictly increasing sequence. Out-of-order or
    /// duplicate elements are rejected rather than silently sorted, so
    /// caller-side ordering bugs surface immediately.
    pub fn new(elements: Vec<u128>) -> Result<Self> {
        for (i, pair) in elements.windows(2).enumerate() {
            if pair[0] >= pair[1] {
                return Err(Error::NotIncreasing { position: i + 1 });
            }
        }
        Ok(IntegerSet { elements })
    }

    /// The empty set.
    pub fn empty() -> Self {
        IntegerSet {
            elements: Vec::new(),
        }
    }

    /// Wraps a vector already known to be strictly increasing.
    pub(crate) fn from_sorted_unchecked(elements: Vec<u128>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        IntegerSet { elements }
    }

    pub fn elements(&self) -> &[u128] {
        &self.elements
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = u128> + ExactSizeIterator + '_ {
        self.elements.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn min(&self) -> Option<u128> {
        self.elements.first().copied()
    }

    pub fn max(&self) -> Option<u128> {
        self.elements.last().copied()
    }

    /// Binary-search membership test.
    pub fn contains(&self, value: u128) -> bool {
        self.elements.binary_search(&value).is_ok()
    }

    /// The set with `value` appended; `value` must exceed the current
    /// maximum.
    pub(crate) fn appended(&self, value: u128) -> Self {
        debug_assert!(self.max().is_none_or(|m| value > m));
        let mut elements = self.elements.clone();
        elements.push(value);
        IntegerSet { elements }
    }
}

impl std::fmt::Display for IntegerSet {
    /// Comma-separated decimal rendering, matching the CLI input syntax.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for e in &self.elements {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
            first = false;
        }
        Ok(())
    }
}

/// The sum length h of an h-fold sumset. Always at least 1; h = 0 is
/// rejected at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Order(u32);

impl Order {
    pub fn new(h: u32) -> Result<Self> {
        if h == 0 {
            return Err(Error::ZeroOrder);
        }
        Ok(Order(h))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub(crate) fn as_usize(self) -> usize {
        self.0 as usize
    }
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}
