//! Closed forms for early greedy terms, growth bounds, and a
//! self-checking verification suite.
//!
//! Writing a(k, h) for the k-th term after 0 of the greedy B_h-set,
//! the implemented closed forms are:
//!
//! * a(1, h) = 1
//! * a(2, h) = h + 1
//! * a(3, h) = h^2 + h + 1
//! * a(4, h) = (h + 1)(h^2 + 2h + 1) / 2 for odd h,
//!   (h + 1)(h^2 + h + 2) / 2 for even h
//!
//! Two bounds hold along the whole construction: each admitted term is
//! at most h times its predecessor plus one (h * a + 1 never collides
//! with anything below it), and hence the k-th term is at most
//! 1 + h + ... + h^(k-1). The partial geometric sums themselves,
//! prefixed with 0, always form a B_h-set.
//!
//! [`verify_suite`] recomputes greedy prefixes over configurable ranges
//! and checks every one of these statements against them, reporting a
//! [`VerificationReport`] with one record per claim. Computation errors
//! become failed records rather than panics, so a report is always
//! produced.

use crate::error::{Error, Result};
use crate::greedy::greedy_prefix;
use crate::set::{IntegerSet, Order};
use crate::sumset::is_bh;

/// Closed form for the k-th greedy term after 0. Only k in 1..=4 has a
/// known formula; anything else is an `UnknownFormula` error.
pub fn a_formula(k: u32, h: Order) -> Result<u128> {
    let n = h.get() as u128;
    let overflow = || Error::Overflow {
        context: format!("the a({k}) closed form at h = {n}"),
    };
    match k {
        1 => Ok(1),
        2 => n.checked_add(1).ok_or_else(overflow),
        3 => n
            .checked_mul(n)
            .and_then(|sq| sq.checked_add(n))
            .and_then(|v| v.checked_add(1))
            .ok_or_else(overflow),
        4 => {
            let parity_factor = if n % 2 == 1 {
                // h odd: h^2 + 2h + 1 is even, halve it up front.
                n.checked_mul(n)
                    .and_then(|sq| sq.checked_add(2 * n))
                    .and_then(|v| v.checked_add(1))
            } else {
                // h even: h^2 + h + 2 is even as well.
                n.checked_mul(n)
                    .and_then(|sq| sq.checked_add(n))
                    .and_then(|v| v.checked_add(2))
            }
            .ok_or_else(overflow)?;
            (n + 1).checked_mul(parity_factor / 2).ok_or_else(overflow)
        }
        _ => Err(Error::UnknownFormula { k }),
    }
}

/// The geometric partial sum 1 + h + h^2 + ... + h^(k-1): an upper
/// bound for the k-th greedy term after 0.
///
/// # Panics
///
/// If `k` is zero; the bound concerns admitted terms only.
pub fn geometric_bound(h: Order, k: u32) -> Result<u128> {
    assert!(k >= 1, "the bound applies from the first admitted term on");
    let base = h.get() as u128;
    let overflow = || Error::Overflow {
        context: format!("the geometric sum over powers of {base}"),
    };
    let mut power: u128 = 1;
    let mut sum: u128 = 1;
    for _ in 1..k {
        power = power.checked_mul(base).ok_or_else(overflow)?;
        sum = sum.checked_add(power).ok_or_else(overflow)?;
    }
    Ok(sum)
}

/// The value h * max(a) + 1, which can always be appended to a B_h-set
/// `a` without breaking the property: it exceeds every stored sum, so
/// no probe can collide.
///
/// # Panics
///
/// If `a` is empty.
pub fn safe_extension(a: &IntegerSet, h: Order) -> Result<u128> {
    let max = a.max().expect("a nonempty set is required");
    (h.get() as u128)
        .checked_mul(max)
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::Overflow {
            context: format!("the safe extension h * {max} + 1"),
        })
}

/// {0} followed by the first `k` geometric partial sums of h: in base
/// h these are the repunits 1, 11, 111, ... This family is a B_h-set
/// for every h and k.
pub fn repunit_set(h: Order, k: u32) -> Result<IntegerSet> {
    let mut elements = Vec::with_capacity(k as usize + 1);
    elements.push(0);
    for i in 1..=k {
        elements.push(geometric_bound(h, i)?);
    }
    Ok(IntegerSet::new(elements).expect("partial sums grow strictly"))
}

/// Ranges the verification suite covers. Defaults keep a full run in
/// interactive time: the quadratic form out to h = 30, the
/// quasi-polynomial out to h = 20 (its greedy prefixes cost the most),
/// bounds on every prefix computed along the way, and the repunit
/// family over a small grid.
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Largest h checked against the a(3) closed form.
    pub h_max_a3: u32,
    /// Largest h checked against the a(4) closed form.
    pub h_max_a4: u32,
    /// Greedy terms computed per order (so formulas up to a(4) need 4).
    pub prefix_depth: u32,
    /// Largest h in the repunit family check.
    pub repunit_h_max: u32,
    /// Largest number of repunit terms per h.
    pub repunit_k_max: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            h_max_a3: 30,
            h_max_a4: 20,
            prefix_depth: 4,
            repunit_h_max: 5,
            repunit_k_max: 6,
        }
    }
}

/// Outcome of one verified claim: what was expected, what was
/// computed, and over which range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimRecord {
    /// Stable machine-readable claim name, e.g. `a3_formula`.
    pub id: String,
    /// Human-readable range description, e.g. `h = 1..=30`.
    pub range: String,
    /// Expected values in range order, as decimal strings.
    pub expected: Vec<String>,
    /// Computed values in the same order.
    pub computed: Vec<String>,
    pub pass: bool,
    /// One-line summary: the claim statement and the check count, or
    /// the first discrepancy / error.
    pub details: String,
}

/// All claim records of one suite run plus the conjunction of their
/// outcomes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub claims: Vec<ClaimRecord>,
    pub pass: bool,
}

/// Runs every claim check over the configured ranges.
pub fn verify_suite(options: &VerifyOptions) -> VerificationReport {
    let h_top = options.h_max_a3.max(options.h_max_a4);
    let mut prefixes: Vec<(u32, Result<IntegerSet>)> = Vec::new();
    for h in 1..=h_top {
        let depth = if h <= options.h_max_a4 {
            options.prefix_depth
        } else {
            // Beyond the a(4) range only shallower claims apply; the
            // fourth term is the expensive one, so skip it.
            options.prefix_depth.min(3)
        };
        let order = Order::new(h).expect("h starts at 1");
        prefixes.push((h, greedy_prefix(order, depth)));
    }

    let mut claims = Vec::new();
    for k in 1..=4u32.min(options.prefix_depth) {
        let h_max = match k {
            3 => options.h_max_a3,
            4 => options.h_max_a4,
            _ => h_top,
        };
        claims.push(check_formula(k, h_max, &prefixes));
    }
    claims.push(check_extension_bound(&prefixes));
    claims.push(check_geometric_bound(&prefixes));
    claims.push(check_repunit_family(options));

    let pass = claims.iter().all(|c| c.pass);
    VerificationReport { claims, pass }
}

const FORMULA_TEXT: [&str; 4] = [
    "a(1) = 1",
    "a(2) = h + 1",
    "a(3) = h^2 + h + 1",
    "a(4) = (h + 1)(h^2 + 2h + 1)/2 for odd h, (h + 1)(h^2 + h + 2)/2 for even h",
];

fn check_formula(k: u32, h_max: u32, prefixes: &[(u32, Result<IntegerSet>)]) -> ClaimRecord {
    let statement = FORMULA_TEXT[k as usize - 1];
    let id = if k == 4 {
        "a4_quasipolynomial".to_string()
    } else {
        format!("a{k}_formula")
    };
    let range = format!("h = 1..={h_max}");
    let mut expected = Vec::new();
    let mut computed = Vec::new();
    let mut failure: Option<String> = None;
    for (h, prefix) in prefixes.iter().filter(|(h, _)| *h <= h_max) {
        let order = Order::new(*h).expect("h starts at 1");
        let want = match a_formula(k, order) {
            Ok(v) => v,
            Err(e) => {
                failure.get_or_insert(format!("closed form failed at h = {h}: {e}"));
                expected.push("error".to_string());
                computed.push("error".to_string());
                continue;
            }
        };
        expected.push(want.to_string());
        match prefix {
            Ok(terms) => {
                let got = terms.elements()[k as usize];
                computed.push(got.to_string());
                if got != want {
                    failure.get_or_insert(format!(
                        "mismatch at h = {h}: expected {want}, computed {got}"
                    ));
                }
            }
            Err(e) => {
                computed.push("error".to_string());
                failure.get_or_insert(format!("greedy prefix failed at h = {h}: {e}"));
            }
        }
    }
    let checked = expected.len();
    ClaimRecord {
        id,
        range,
        expected,
        computed,
        pass: failure.is_none(),
        details: failure.unwrap_or_else(|| format!("{statement}; {checked}/{checked} match")),
    }
}

fn check_extension_bound(prefixes: &[(u32, Result<IntegerSet>)]) -> ClaimRecord {
    let h_top = prefixes.last().map_or(0, |(h, _)| *h);
    let mut inequalities = 0usize;
    let mut failure: Option<String> = None;
    for (h, prefix) in prefixes {
        let Ok(terms) = prefix else { continue };
        for pair in terms.elements().windows(2) {
            let bound = (*h as u128)
                .checked_mul(pair[0])
                .and_then(|v| v.checked_add(1));
            match bound {
                Some(bound) if pair[1] <= bound => inequalities += 1,
                Some(bound) => {
                    failure.get_or_insert(format!(
                        "h = {h}: term {} exceeds {} * {} + 1 = {bound}",
                        pair[1], h, pair[0]
                    ));
                }
                None => {
                    failure.get_or_insert(format!("h = {h}: bound overflows at {}", pair[0]));
                }
            }
        }
    }
    ClaimRecord {
        id: "extension_bound".to_string(),
        range: format!("h = 1..={h_top}, all computed prefixes"),
        expected: Vec::new(),
        computed: Vec::new(),
        pass: failure.is_none(),
        details: failure.unwrap_or_else(|| {
            format!("each term is at most h * previous + 1; {inequalities} inequalities hold")
        }),
    }
}

fn check_geometric_bound(prefixes: &[(u32, Result<IntegerSet>)]) -> ClaimRecord {
    let h_top = prefixes.last().map_or(0, |(h, _)| *h);
    let mut inequalities = 0usize;
    let mut failure: Option<String> = None;
    for (h, prefix) in prefixes {
        let Ok(terms) = prefix else { continue };
        let order = Order::new(*h).expect("h starts at 1");
        for (k, &term) in terms.elements().iter().enumerate().skip(1) {
            match geometric_bound(order, k as u32) {
                Ok(bound) if term <= bound => inequalities += 1,
                Ok(bound) => {
                    failure.get_or_insert(format!(
                        "h = {h}: term {term} exceeds the geometric sum {bound} at position {k}"
                    ));
                }
                Err(e) => {
                    failure.get_or_insert(format!("h = {h}: bound failed at position {k}: {e}"));
                }
            }
        }
    }
    ClaimRecord {
        id: "geometric_bound".to_string(),
        range: format!("h = 1..={h_top}, all computed prefixes"),
        expected: Vec::new(),
        computed: Vec::new(),
        pass: failure.is_none(),
        details: failure.unwrap_or_else(|| {
            format!("term k stays within 1 + h + ... + h^(k-1); {inequalities} inequalities hold")
        }),
    }
}

fn check_repunit_family(options: &VerifyOptions) -> ClaimRecord {
    let mut certified = 0usize;
    let mut failure: Option<String> = None;
    for h in 2..=options.repunit_h_max {
        let order = Order::new(h).expect("range starts at 2");
        for k in 1..=options.repunit_k_max {
            let outcome = repunit_set(order, k).and_then(|set| is_bh(&set, order));
            match outcome {
                Ok(verdict) if verdict.is_certified() => certified += 1,
                Ok(_) => {
                    failure
                        .get_or_insert(format!("refuted at h = {h}, k = {k}: family is not B_h"));
                }
                Err(e) => {
                    failure.get_or_insert(format!("check failed at h = {h}, k = {k}: {e}"));
                }
            }
        }
    }
    ClaimRecord {
        id: "repunit_family".to_string(),
        range: format!(
            "h = 2..={}, k = 1..={}",
            options.repunit_h_max, options.repunit_k_max
        ),
        expected: Vec::new(),
        computed: Vec::new(),
        pass: failure.is_none(),
        details: failure.unwrap_or_else(|| {
            format!("0 with the base-h repunits stays B_h; {certified} sets certified")
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sumset::{binomial, h_fold_sumset};

    fn order(h: u32) -> Order {
        Order::new(h).unwrap()
    }

    #[test]
    fn closed_forms_at_small_orders() {
        assert_eq!(a_formula(1, order(7)).unwrap(), 1);
        assert_eq!(a_formula(2, order(2)).unwrap(), 3);
        assert_eq!(a_formula(3, order(2)).unwrap(), 7);
        assert_eq!(a_formula(3, order(3)).unwrap(), 13);
        assert_eq!(a_formula(4, order(1)).unwrap(), 4);
        assert_eq!(a_formula(4, order(2)).unwrap(), 12);
        assert_eq!(a_formula(4, order(3)).unwrap(), 32);
        assert_eq!(a_formula(4, order(4)).unwrap(), 55);
    }

    #[test]
    fn order_one_terms_are_consecutive() {
        for k in 1..=4 {
            assert_eq!(a_formula(k, order(1)).unwrap(), k as u128);
        }
    }

    #[test]
    fn unknown_term_index_is_a_typed_error() {
        for k in [0, 5, 12] {
            match a_formula(k, order(2)) {
                Err(Error::UnknownFormula { k: got }) => assert_eq!(got, k),
                other => panic!("expected an unknown-formula error, got {other:?}"),
            }
        }
    }

    #[test]
    fn geometric_bound_values() {
        assert_eq!(geometric_bound(order(2), 1).unwrap(), 1);
        assert_eq!(geometric_bound(order(2), 4).unwrap(), 15);
        assert_eq!(geometric_bound(order(3), 3).unwrap(), 13);
        assert_eq!(geometric_bound(order(1), 6).unwrap(), 6);
    }

    #[test]
    fn geometric_bound_overflow_is_typed() {
        let err = geometric_bound(order(u32::MAX), 40).unwrap_err();
        assert!(matches!(err, Error::Overflow { .. }));
    }

    #[test]
    fn safe_extension_values() {
        let a = IntegerSet::new(vec![0, 1, 3, 7]).unwrap();
        assert_eq!(safe_extension(&a, order(2)).unwrap(), 15);
        assert_eq!(safe_extension(&a, order(3)).unwrap(), 22);
    }

    #[test]
    fn safe_extension_never_collides() {
        for h in 1..=4u32 {
            let h = order(h);
            let a = crate::greedy::greedy_prefix(h, 4).unwrap();
            let c = safe_extension(&a, h).unwrap();
            let extended = IntegerSet::new(a.iter().chain(std::iter::once(c)).collect()).unwrap();
            assert!(is_bh(&extended, h).unwrap().is_certified());
        }
    }

    #[test]
    fn repunit_sets_are_b_h() {
        assert_eq!(
            repunit_set(order(2), 4).unwrap().elements(),
            &[0, 1, 3, 7, 15]
        );
        assert_eq!(repunit_set(order(3), 3).unwrap().elements(), &[0, 1, 4, 13]);
        for h in 2..=4 {
            let h = order(h);
            for k in 1..=5 {
                let set = repunit_set(h, k).unwrap();
                assert!(
                    is_bh(&set, h).unwrap().is_certified(),
                    "repunits refused at h = {}, k = {k}",
                    h.get()
                );
                let sumset = h_fold_sumset(&set, h).unwrap();
                let expected =
                    binomial(set.len() as u128 + h.get() as u128 - 1, h.get() as u128).unwrap();
                assert_eq!(sumset.len() as u128, expected);
            }
        }
    }

    #[test]
    fn default_suite_ranges() {
        let options = VerifyOptions::default();
        assert_eq!(options.h_max_a3, 30);
        assert_eq!(options.h_max_a4, 20);
        assert_eq!(options.prefix_depth, 4);
    }

    #[test]
    fn small_suite_passes_with_full_claim_set() {
        let report = verify_suite(&VerifyOptions {
            h_max_a3: 6,
            h_max_a4: 4,
            prefix_depth: 4,
            repunit_h_max: 3,
            repunit_k_max: 4,
        });
        assert!(report.pass);
        let ids: Vec<&str> = report.claims.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(
            ids,
            vec![
                "a1_formula",
                "a2_formula",
                "a3_formula",
                "a4_quasipolynomial",
                "extension_bound",
                "geometric_bound",
                "repunit_family",
            ]
        );
        assert!(report.claims.iter().all(|c| c.pass));
        let a3 = &report.claims[2];
        assert_eq!(a3.range, "h = 1..=6");
        assert_eq!(a3.expected, vec!["3", "7", "13", "21", "31", "43"]);
        assert_eq!(a3.expected, a3.computed);
    }

    #[test]
    fn shallow_suite_skips_deeper_formulas() {
        let report = verify_suite(&VerifyOptions {
            h_max_a3: 3,
            h_max_a4: 2,
            prefix_depth: 2,
            repunit_h_max: 2,
            repunit_k_max: 2,
        });
        assert!(report.pass);
        assert!(report.claims.iter().all(|c| c.id != "a3_formula"));
        assert!(report.claims.iter().any(|c| c.id == "a2_formula"));
    }
}
