//! The cyclic precedence order on the integers and the intervals it induces.
//!
//! `a` precedes `b` when `-1/a < -1/b`, reading `1/0` as infinity. Zero comes
//! first, the positive integers follow in increasing order, then the negative
//! integers in increasing order, ending with `-1`:
//! `0, 1, 2, ..., -2, -1`.
//!
//! Closing the line back from `-1` to `0` makes every interval an arc of a
//! cycle. `Z_{a,b}` is `[a, b]` when `a` precedes (or equals) `b`, and the
//! wrapped set `[a, -1] ∪ [0, b]` otherwise.

use std::cmp::Ordering;

use thiserror::Error;

/// Largest magnitude accepted at the API boundary.
pub const MAX_MAGNITUDE: i64 = 1 << 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("{0} is not strictly comparable with itself")]
    NotStrictlyComparable(i64),
    #[error("integer {0} is outside the supported range ±2^62")]
    OutOfRange(i64),
    #[error("-1 is the last element and has no successor")]
    NoSuccessor,
    #[error("the interval {0} is infinite and cannot be enumerated")]
    Infinite(CyclicInterval),
    #[error("intervals {0} and {1} are not adjacent")]
    NotAdjacent(CyclicInterval, CyclicInterval),
    #[error("intervals {0} and {1} overlap")]
    Overlapping(CyclicInterval, CyclicInterval),
}

pub fn check_range(a: i64) -> Result<i64, OrderError> {
    if (-MAX_MAGNITUDE..=MAX_MAGNITUDE).contains(&a) {
        Ok(a)
    } else {
        Err(OrderError::OutOfRange(a))
    }
}

fn position(a: i64) -> (bool, i64) {
    (a < 0, a)
}

/// Total order of the precedence relation, with `Equal` only for `a == b`.
pub fn compare(a: i64, b: i64) -> Ordering {
    position(a).cmp(&position(b))
}

/// Strict precedence `a ≺ b`. Equal arguments are reported as an error.
pub fn precedes(a: i64, b: i64) -> Result<bool, OrderError> {
    check_range(a)?;
    check_range(b)?;
    match compare(a, b) {
        Ordering::Less => Ok(true),
        Ordering::Greater => Ok(false),
        Ordering::Equal => Err(OrderError::NotStrictlyComparable(a)),
    }
}

/// `a ⪯ b`
pub fn precedes_or_eq(a: i64, b: i64) -> bool {
    compare(a, b) != Ordering::Greater
}

/// Next element in precedence order; `-1` has none.
pub fn successor(u: i64) -> Result<i64, OrderError> {
    check_range(u)?;
    if u == -1 {
        Err(OrderError::NoSuccessor)
    } else {
        Ok(u + 1)
    }
}

/// Cyclic predecessor, wrapping `0` to `-1`.
fn cyclic_predecessor(u: i64) -> i64 {
    if u == 0 {
        -1
    } else {
        u - 1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IntervalKind {
    /// `a ⪯ b`: the elements from `a` to `b` in precedence order.
    Forward,
    /// `a ≻ b`: everything except the open interval `(b, a)`.
    Wraparound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclicInterval {
    start: i64,
    end: i64,
    kind: IntervalKind,
}

impl std::fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Z[{}, {}]", self.start, self.end)
    }
}

/// `Z_{a,b}`
pub fn interval(a: i64, b: i64) -> Result<CyclicInterval, OrderError> {
    CyclicInterval::new(a, b)
}

impl CyclicInterval {
    pub fn new(start: i64, end: i64) -> Result<Self, OrderError> {
        check_range(start)?;
        check_range(end)?;
        let kind = if precedes_or_eq(start, end) {
            IntervalKind::Forward
        } else {
            IntervalKind::Wraparound
        };
        Ok(Self { start, end, kind })
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.end
    }

    pub fn kind(&self) -> IntervalKind {
        self.kind
    }

    pub fn contains(&self, u: i64) -> bool {
        match self.kind {
            IntervalKind::Forward => precedes_or_eq(self.start, u) && precedes_or_eq(u, self.end),
            IntervalKind::Wraparound => {
                !(compare(self.end, u).is_lt() && compare(u, self.start).is_lt())
            }
        }
    }

    /// Whether the interval is all of `Z`.
    pub fn is_full(&self) -> bool {
        self.end == cyclic_predecessor(self.start)
    }

    /// A forward interval is finite unless it runs from the non-negatives into
    /// the negatives; a wrapped one only when it starts negative and ends
    /// non-negative.
    pub fn is_finite(&self) -> bool {
        match self.kind {
            IntervalKind::Forward => (self.start < 0) == (self.end < 0),
            IntervalKind::Wraparound => self.start < 0 && self.end >= 0,
        }
    }

    /// Number of elements, `None` when infinite.
    pub fn len(&self) -> Option<u128> {
        if !self.is_finite() {
            return None;
        }
        let span = |lo: i64, hi: i64| (hi as i128 - lo as i128 + 1) as u128;
        Some(match self.kind {
            IntervalKind::Forward => span(self.start, self.end),
            IntervalKind::Wraparound => span(self.start, -1) + span(0, self.end),
        })
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Elements in precedence order. Infinite intervals are an error.
    pub fn iter(&self) -> Result<impl Iterator<Item = i64>, OrderError> {
        if !self.is_finite() {
            return Err(OrderError::Infinite(*self));
        }
        let (first, second) = match self.kind {
            IntervalKind::Forward => (self.start..=self.end, None),
            IntervalKind::Wraparound => (0..=self.end, Some(self.start..=-1)),
        };
        Ok(first.chain(second.into_iter().flatten()))
    }

    /// The complement `(end, start)` as an interval, `None` when this interval is all of `Z`.
    pub fn complement(&self) -> Option<CyclicInterval> {
        if self.is_full() {
            return None;
        }
        let lo = if self.end == -1 { 0 } else { self.end + 1 };
        let hi = cyclic_predecessor(self.start);
        Some(CyclicInterval::new(lo, hi).expect("neighbours of in-range values stay in range"))
    }
}

/// Joins two disjoint intervals where the second starts at the successor of
/// the first one's end.
pub fn interval_concat(
    first: &CyclicInterval,
    second: &CyclicInterval,
) -> Result<CyclicInterval, OrderError> {
    let next = successor(first.end)?;
    if next != second.start {
        return Err(OrderError::NotAdjacent(*first, *second));
    }
    // `second` must stay inside the complement of `first`, which starts at `next`.
    let disjoint = match first.complement() {
        Some(rest) => rest.contains(second.end),
        None => false,
    };
    if !disjoint {
        return Err(OrderError::Overlapping(*first, *second));
    }
    CyclicInterval::new(first.start, second.end)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_precedence() {
        assert!(precedes(3, 5).unwrap());
        assert!(precedes(7, -7).unwrap());
        assert!(precedes(-2, -1).unwrap());
        assert!(precedes(0, 1).unwrap());
        assert!(!precedes(-1, 0).unwrap());
        assert_eq!(precedes(4, 4), Err(OrderError::NotStrictlyComparable(4)));
    }

    #[test]
    fn range_is_enforced() {
        assert!(matches!(
            precedes(i64::MAX, 0),
            Err(OrderError::OutOfRange(_))
        ));
        assert!(matches!(
            interval(0, i64::MIN),
            Err(OrderError::OutOfRange(_))
        ));
        assert!(interval(MAX_MAGNITUDE, -MAX_MAGNITUDE).is_ok());
    }

    #[test]
    fn forward_interval() {
        let g = interval(1, 4).unwrap();
        assert_eq!(g.kind(), IntervalKind::Forward);
        assert_eq!(g.iter().unwrap().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(g.len(), Some(4));
    }

    #[test]
    fn wrapped_finite_interval() {
        let g = interval(-3, 2).unwrap();
        assert_eq!(g.kind(), IntervalKind::Wraparound);
        assert_eq!(
            g.iter().unwrap().collect::<Vec<_>>(),
            vec![0, 1, 2, -3, -2, -1]
        );
    }

    #[test]
    fn wrapped_infinite_interval() {
        let g = interval(5, 2).unwrap();
        assert_eq!(g.kind(), IntervalKind::Wraparound);
        assert!(!g.is_finite());
        assert!(matches!(g.iter(), Err(OrderError::Infinite(_))));
        for u in [5, 100, -1, 2] {
            assert!(g.contains(u));
        }
        assert!(!g.contains(3));
        assert!(!g.contains(4));
    }

    #[test]
    fn forward_across_infinity_is_infinite() {
        let g = interval(3, -2).unwrap();
        assert_eq!(g.kind(), IntervalKind::Forward);
        assert!(!g.is_finite());
        assert!(g.contains(1_000_000) && g.contains(-1_000_000) && !g.contains(-1));
    }

    #[test]
    fn successor_stops_at_minus_one() {
        assert_eq!(successor(-2), Ok(-1));
        assert_eq!(successor(-1), Err(OrderError::NoSuccessor));
    }

    #[test]
    fn concatenation() {
        let joined = interval_concat(&interval(1, 3).unwrap(), &interval(4, 6).unwrap()).unwrap();
        assert_eq!(joined, interval(1, 6).unwrap());

        let whole = interval_concat(&interval(0, 2).unwrap(), &interval(3, -1).unwrap()).unwrap();
        assert!(whole.is_full());
        assert_eq!(whole, interval(0, -1).unwrap());

        let gap = interval_concat(&interval(1, 3).unwrap(), &interval(5, 6).unwrap());
        assert!(matches!(gap, Err(OrderError::NotAdjacent(..))));
    }

    #[test]
    fn concatenation_rejects_overlap() {
        let overlap = interval_concat(&interval(0, 5).unwrap(), &interval(6, 3).unwrap());
        assert!(matches!(overlap, Err(OrderError::Overlapping(..))));
        let full_first = interval_concat(&interval(4, 3).unwrap(), &interval(4, 6).unwrap());
        assert!(matches!(full_first, Err(OrderError::Overlapping(..))));
    }

    #[test]
    fn one_step_back_is_everything() {
        for a in -20..=20 {
            let g = interval(a, a - 1).unwrap();
            assert!(g.is_full());
            assert!((-200..=200).all(|u| g.contains(u)));
        }
    }
}
