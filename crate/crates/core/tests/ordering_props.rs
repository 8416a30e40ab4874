use proptest::prelude::*;
use zetareg::ordering::{interval, interval_concat, precedes, IntervalKind};
use zetareg::{rational, ExactRational};

/// `-1/a`, with `-1/0` read as negative infinity.
fn key(a: i64) -> Option<ExactRational> {
    (a != 0).then(|| rational(-1, a))
}

fn oracle_precedes(a: i64, b: i64) -> bool {
    match (key(a), key(b)) {
        (None, Some(_)) => true,
        (Some(_), None) | (None, None) => false,
        (Some(x), Some(y)) => x < y,
    }
}

#[test]
fn matches_reciprocal_definition() {
    for a in -100..=100 {
        for b in -100..=100 {
            if a == b {
                assert!(precedes(a, b).is_err());
                continue;
            }
            let ab = precedes(a, b).unwrap();
            assert_eq!(ab, oracle_precedes(a, b), "{a} vs {b}");
            assert_ne!(ab, precedes(b, a).unwrap(), "totality at {a}, {b}");
        }
    }
}

#[test]
fn transitive() {
    let values: Vec<i64> = (-100..=100).step_by(7).collect();
    for &a in &values {
        for &b in &values {
            for &c in &values {
                if a == b || b == c || a == c {
                    continue;
                }
                if precedes(a, b).unwrap() && precedes(b, c).unwrap() {
                    assert!(precedes(a, c).unwrap(), "{a} ≺ {b} ≺ {c}");
                }
            }
        }
    }
}

/// Membership straight from the set description.
fn oracle_contains(a: i64, b: i64, u: i64) -> bool {
    let le = |x: i64, y: i64| x == y || oracle_precedes(x, y);
    if le(a, b) {
        le(a, u) && le(u, b)
    } else {
        !(oracle_precedes(b, u) && oracle_precedes(u, a))
    }
}

proptest! {
    #[test]
    fn membership_matches_set_description(a in -60i64..60, b in -60i64..60, u in -80i64..80) {
        prop_assert_eq!(interval(a, b).unwrap().contains(u), oracle_contains(a, b, u));
    }

    #[test]
    fn finite_intervals_enumerate_their_members(a in -30i64..30, b in -30i64..30) {
        let g = interval(a, b).unwrap();
        if let Ok(iter) = g.iter() {
            let members: Vec<i64> = iter.collect();
            let expected: Vec<i64> = {
                let mut v: Vec<i64> = (-200..=200).filter(|&u| oracle_contains(a, b, u)).collect();
                v.sort_by(|&x, &y| zetareg::ordering::compare(x, y));
                v
            };
            prop_assert_eq!(members.len() as u128, g.len().unwrap());
            prop_assert_eq!(members, expected);
        } else {
            prop_assert!(!g.is_finite());
            prop_assert!(oracle_contains(a, b, 1_000) || oracle_contains(a, b, -1_000));
        }
    }

    #[test]
    fn splitting(a in -40i64..40, c in -40i64..40, pick in 0usize..1000) {
        let whole = interval(a, c).unwrap();
        let candidates: Vec<i64> = (-60..=60)
            .filter(|&b| whole.contains(b) && b != c && b != -1)
            .collect();
        prop_assume!(!candidates.is_empty());
        let b = candidates[pick % candidates.len()];
        let left = interval(a, b).unwrap();
        let right = interval(b + 1, c).unwrap();
        for u in -120..=120 {
            let l = left.contains(u);
            let r = right.contains(u);
            prop_assert!(!(l && r), "{} in both halves", u);
            prop_assert_eq!(whole.contains(u), l || r, "u = {}", u);
        }
        prop_assert_eq!(interval_concat(&left, &right).unwrap(), whole);
    }
}

#[test]
fn one_step_back_covers_everything() {
    for a in -100..=100 {
        let g = interval(a, a - 1).unwrap();
        assert!((-300..=300).all(|u| g.contains(u)), "a = {a}");
        assert!(g.is_full());
    }
}

#[test]
fn kinds() {
    assert_eq!(interval(-3, 2).unwrap().kind(), IntervalKind::Wraparound);
    assert_eq!(interval(2, -3).unwrap().kind(), IntervalKind::Forward);
    assert_eq!(interval(4, 4).unwrap().kind(), IntervalKind::Forward);
}
