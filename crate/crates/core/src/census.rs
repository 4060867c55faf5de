//! Class numbers of imaginary quadratic fields.
//!
//! Three routes are provided: counting reduced forms of one discriminant,
//! the analytic class number formula (an independent oracle), and a batch
//! sweep that enumerates every reduced form with |D| ≤ X once and buckets it
//! by discriminant.

use std::collections::{BTreeMap, BTreeSet};
use std::thread;

use num_integer::{Integer, Roots};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::{kronecker, Discriminant, FactorSieve};
use crate::watkins::WatkinsRow;

/// Largest census bound accepted. Far below where 4ac - b² could overflow,
/// but large enough for the full h ≤ 100 table (X = 2,383,747).
pub const MAX_BOUND: u64 = 10_000_000;

/// A primitive positive-definite reduced binary quadratic form ax² + bxy + cy².
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ReducedForm {
    a: i64,
    b: i64,
    c: i64,
}

impl ReducedForm {
    pub fn new(a: i64, b: i64, c: i64) -> Result<Self> {
        let disc = b
            .checked_mul(b)
            .and_then(|bb| a.checked_mul(c).and_then(|ac| ac.checked_mul(4)).map(|ac4| bb - ac4))
            .ok_or(Error::Overflow("form discriminant"))?;
        let reduced = a > 0 && b.abs() <= a && a <= c && !((b.abs() == a || a == c) && b < 0);
        if disc >= 0 || !reduced || a.gcd(&b).gcd(&c) != 1 {
            return Err(Error::Domain(format!("({a}, {b}, {c}) is not a primitive reduced form")));
        }
        Ok(ReducedForm { a, b, c })
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn discriminant(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }
}

/// Visits every primitive reduced form of discriminant `d` with b ≥ 0,
/// passing whether its mirror (a, -b, c) is also reduced and distinct.
fn for_each_nonneg_form(d: Discriminant, mut visit: impl FnMut(i64, i64, i64, bool)) {
    let n = d.magnitude() as i64;
    let b_max = (n / 3).sqrt();
    let mut b = n & 1;
    while b <= b_max {
        let ac = (b * b + n) / 4;
        let mut a = b.max(1);
        while a * a <= ac {
            if ac % a == 0 {
                let c = ac / a;
                if a.gcd(&b).gcd(&c) == 1 {
                    let mirrored = b > 0 && b < a && a < c;
                    visit(a, b, c, mirrored);
                }
            }
            a += 1;
        }
        b += 2;
    }
}

/// All primitive reduced forms of discriminant `d`, sorted.
pub fn reduced_forms(d: Discriminant) -> Vec<ReducedForm> {
    let mut out = Vec::new();
    for_each_nonneg_form(d, |a, b, c, mirrored| {
        out.push(ReducedForm { a, b, c });
        if mirrored {
            out.push(ReducedForm { a, b: -b, c });
        }
    });
    out.sort();
    out
}

/// h(D) as the number of primitive reduced forms of discriminant D.
pub fn class_number_forms(d: Discriminant) -> u64 {
    let mut h = 0;
    for_each_nonneg_form(d, |_, _, _, mirrored| h += if mirrored { 2 } else { 1 });
    h
}

/// Number of roots of unity in the field of discriminant `d`.
pub fn roots_of_unity(d: Discriminant) -> u64 {
    match d.value() {
        -3 => 6,
        -4 => 4,
        _ => 2,
    }
}

/// h(D) from the analytic class number formula
/// h = w / (2|D|) · |Σ_{k<|D|} (D/k)·k|.
pub fn class_number_dirichlet(d: Discriminant) -> Result<u64> {
    let n = d.magnitude();
    let mut sum: i64 = 0;
    for k in 1..n {
        sum += kronecker(d.value(), k)? as i64 * k as i64;
    }
    let numerator = roots_of_unity(d) * sum.unsigned_abs();
    let denominator = 2 * n;
    if !numerator.is_multiple_of(denominator) {
        return Err(Error::Invariant(format!(
            "class number formula for {d} is not integral: {numerator}/{denominator}"
        )));
    }
    Ok(numerator / denominator)
}

/// Contiguous ranges of the leading coefficient `a`, one per worker, with
/// roughly equal numbers of enumerated forms.
fn partition_leading(bound: u64, workers: usize) -> Vec<(u64, u64)> {
    let a_max = (bound / 3).sqrt();
    // forms with leading coefficient a: about 2a·(X/4a - a) = X/2 - 2a².
    let weight = |a: u64| (bound / 2).saturating_sub(2 * a * a).max(1);
    let total: u64 = (1..=a_max).map(weight).sum();
    let mut chunks = Vec::with_capacity(workers);
    let mut start = 1;
    let mut acc = 0;
    for a in 1..=a_max {
        acc += weight(a);
        let target = total * (chunks.len() as u64 + 1) / workers as u64;
        if acc >= target && chunks.len() + 1 < workers {
            chunks.push((start, a));
            start = a + 1;
        }
    }
    chunks.push((start, a_max));
    chunks
}

/// Adds one count at |D| for every primitive reduced form with
/// 1 ≤ leading coefficient in `a_range` and |D| ≤ bound.
fn sweep_range(bound: u64, (a_lo, a_hi): (u64, u64), hist: &mut [u32]) {
    for a in a_lo..=a_hi {
        let step = 4 * a;
        // b ranges over (-a, a]; b < 0 forces c > a.
        for b in -(a as i64 - 1)..=(a as i64) {
            let bb = (b * b) as u64;
            let c_min = if b < 0 { a + 1 } else { a };
            let c_max = (bound + bb) / step;
            if c_max < c_min {
                continue;
            }
            let g = a.gcd(&b.unsigned_abs());
            let mut disc = step * c_min - bb;
            if g == 1 {
                for _ in c_min..=c_max {
                    hist[disc as usize] += 1;
                    disc += step;
                }
            } else {
                for c in c_min..=c_max {
                    if g.gcd(&c) == 1 {
                        hist[disc as usize] += 1;
                    }
                    disc += step;
                }
            }
        }
    }
}

/// Histogram of primitive reduced forms by |D| for every discriminant
/// (fundamental or not) with |D| ≤ bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormSweep {
    bound: u64,
    counts: Vec<u32>,
}

impl FormSweep {
    pub fn run(bound: u64, workers: usize) -> Result<Self> {
        if bound < 3 {
            return Err(Error::BoundTooSmall { bound });
        }
        if bound > MAX_BOUND {
            return Err(Error::BoundTooLarge { bound, max: MAX_BOUND });
        }
        let workers = workers.max(1);
        let len = bound as usize + 1;
        let chunks = partition_leading(bound, workers);
        let mut counts = if chunks.len() == 1 {
            let mut hist = vec![0u32; len];
            sweep_range(bound, chunks[0], &mut hist);
            hist
        } else {
            let partials: Vec<Vec<u32>> = thread::scope(|scope| {
                let handles: Vec<_> = chunks
                    .iter()
                    .map(|&range| {
                        scope.spawn(move || {
                            let mut hist = vec![0u32; len];
                            sweep_range(bound, range, &mut hist);
                            hist
                        })
                    })
                    .collect();
                handles
                    .into_iter()
                    .map(|h| h.join().expect("census worker panicked"))
                    .collect()
            });
            let mut iter = partials.into_iter();
            let mut total = iter.next().unwrap_or_else(|| vec![0u32; len]);
            for part in iter {
                for (t, p) in total.iter_mut().zip(&part) {
                    *t += *p;
                }
            }
            total
        };
        counts.shrink_to_fit();
        Ok(FormSweep { bound, counts })
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// h(D) read off the sweep, or None when |D| lies beyond the bound.
    pub fn class_number(&self, d: Discriminant) -> Option<u64> {
        self.counts.get(d.magnitude() as usize).map(|&h| h as u64)
    }

    /// Number of primitive reduced forms of discriminant -magnitude,
    /// whether or not it is fundamental.
    pub fn raw_count(&self, magnitude: u64) -> Option<u32> {
        self.counts.get(magnitude as usize).copied()
    }

    /// Collapses the sweep into per-class-number counts over the fundamental
    /// discriminants, certifying each h whose reference witness is in range.
    pub fn tabulate(&self, reference: &[WatkinsRow]) -> Result<CensusTable> {
        let sieve = FactorSieve::new(self.bound);
        let mut rows: BTreeMap<u32, CensusRow> = BTreeMap::new();
        for n in 3..=self.bound {
            let d = -(n as i64);
            if !sieve.is_fundamental(d) {
                continue;
            }
            let h = self.counts[n as usize];
            if h == 0 {
                return Err(Error::Invariant(format!("no reduced forms found for fundamental {d}")));
            }
            let row = rows.entry(h).or_insert(CensusRow { count: 0, max_abs_disc: 0 });
            row.count += 1;
            row.max_abs_disc = row.max_abs_disc.max(n);
        }
        let complete_through = reference
            .iter()
            .filter(|r| r.largest <= self.bound)
            .map(|r| r.h)
            .collect();
        Ok(CensusTable { bound: self.bound, rows, complete_through })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub count: u64,
    pub max_abs_disc: u64,
}

/// Per-class-number counts over all fundamental discriminants with |D| ≤ bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusTable {
    pub bound: u64,
    pub rows: BTreeMap<u32, CensusRow>,
    /// Class numbers whose count is final at this bound.
    pub complete_through: BTreeSet<u32>,
}

impl CensusTable {
    pub fn total(&self) -> u64 {
        self.rows.values().map(|r| r.count).sum()
    }

    pub fn is_complete(&self, h: u32) -> bool {
        self.complete_through.contains(&h)
    }

    /// Count for `h` seen so far (0 if none).
    pub fn count(&self, h: u32) -> u64 {
        self.rows.get(&h).map_or(0, |r| r.count)
    }

    /// Count for `h`, only if it is certified complete.
    pub fn certified_count(&self, h: u32) -> Option<u64> {
        self.is_complete(h).then(|| self.count(h))
    }
}

/// Class-number census of every fundamental discriminant -bound ≤ D < 0,
/// certified against the embedded reference table.
pub fn census(bound: u64, workers: usize) -> Result<CensusTable> {
    let reference = crate::watkins::load_watkins()?;
    FormSweep::run(bound, workers)?.tabulate(&reference)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct WatkinsCheck {
    pub h: u32,
    pub expected: u64,
    pub actual: u64,
    pub verdict: Verdict,
}

/// Compares certified census rows against the reference counts. Rows that
/// are not yet complete at the census bound are inconclusive.
pub fn verify_watkins(table: &CensusTable, reference: &[WatkinsRow]) -> Vec<WatkinsCheck> {
    reference
        .iter()
        .map(|r| {
            let actual = table.count(r.h);
            let verdict = if !table.is_complete(r.h) {
                Verdict::Inconclusive
            } else if actual == r.count {
                Verdict::Match
            } else {
                Verdict::Mismatch
            };
            WatkinsCheck { h: r.h, expected: r.count, actual, verdict }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numtheory::is_fundamental;
    use crate::watkins::load_watkins;

    fn disc(d: i64) -> Discriminant {
        Discriminant::new(d).unwrap()
    }

    /// Every triple with 4ac - b² = |D| inside the reduced box, found by
    /// exhaustive search over a, b, c.
    fn forms_brute_force(d: i64) -> Vec<(i64, i64, i64)> {
        let n = -d;
        let mut out = Vec::new();
        for a in 1..=n {
            for b in -a..=a {
                for c in a..=n {
                    if 4 * a * c - b * b == n
                        && !((b.abs() == a || a == c) && b < 0)
                        && a.gcd(&b).gcd(&c) == 1
                    {
                        out.push((a, b, c));
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn forms_examples() {
        assert_eq!(forms_brute_force(-3), vec![(1, 1, 1)]);
        assert_eq!(class_number_forms(disc(-3)), 1);
        assert_eq!(class_number_forms(disc(-163)), 1);
        assert_eq!(class_number_forms(disc(-427)), 2);
        assert_eq!(forms_brute_force(-23), vec![(1, 1, 6), (2, -1, 3), (2, 1, 3)]);
        assert_eq!(class_number_forms(disc(-23)), 3);
        let listed: Vec<_> = reduced_forms(disc(-23)).iter().map(|f| (f.a(), f.b(), f.c())).collect();
        assert_eq!(listed, forms_brute_force(-23));
    }

    #[test]
    fn forms_match_brute_force_small() {
        for d in (-300i64..0).filter(|&d| is_fundamental(d)) {
            let listed: Vec<_> = reduced_forms(disc(d)).iter().map(|f| (f.a(), f.b(), f.c())).collect();
            assert_eq!(listed, forms_brute_force(d), "D = {d}");
            assert!(reduced_forms(disc(d)).iter().all(|f| f.discriminant() == d));
        }
    }

    #[test]
    fn reduced_form_validation() {
        assert!(ReducedForm::new(1, 1, 1).is_ok());
        assert!(ReducedForm::new(2, -1, 3).is_ok());
        assert!(ReducedForm::new(2, -2, 3).is_err());
        assert!(ReducedForm::new(2, -1, 2).is_err());
        assert!(ReducedForm::new(3, 1, 2).is_err());
        assert!(ReducedForm::new(2, 2, 2).is_err());
        assert!(ReducedForm::new(1, 2, 1).is_err());
    }

    #[test]
    fn dirichlet_examples() {
        assert_eq!(class_number_dirichlet(disc(-3)).unwrap(), 1);
        assert_eq!(class_number_dirichlet(disc(-4)).unwrap(), 1);
        assert_eq!(class_number_dirichlet(disc(-47)).unwrap(), 5);
        assert_eq!(class_number_forms(disc(-47)), 5);
        assert_eq!(class_number_dirichlet(disc(-427)).unwrap(), 2);
    }

    #[test]
    fn oracle_equivalence_to_5000() {
        for d in (-5000i64..0).filter(|&d| is_fundamental(d)) {
            assert_eq!(class_number_forms(disc(d)), class_number_dirichlet(disc(d)).unwrap(), "D = {d}");
        }
    }

    #[test]
    fn census_small_bounds() {
        let t = census(3, 1).unwrap();
        assert_eq!(t.rows.len(), 1);
        assert_eq!(t.rows[&1], CensusRow { count: 1, max_abs_disc: 3 });
        assert!(t.complete_through.is_empty());

        let t = census(200, 1).unwrap();
        assert_eq!(t.rows[&1], CensusRow { count: 9, max_abs_disc: 163 });
        assert!(t.is_complete(1));
        assert!(!t.is_complete(2));

        let t = census(1000, 3).unwrap();
        assert_eq!(t.count(2), 18);
        assert_eq!(t.rows[&2].max_abs_disc, 427);
        assert!(t.is_complete(2));
    }

    #[test]
    fn census_rejects_bad_bounds() {
        assert_eq!(census(2, 1), Err(Error::BoundTooSmall { bound: 2 }));
        assert!(matches!(census(MAX_BOUND + 1, 1), Err(Error::BoundTooLarge { .. })));
    }

    #[test]
    fn sweep_matches_single_discriminant() {
        let sweep = FormSweep::run(10_000, 4).unwrap();
        for d in (-10_000i64..0).filter(|&d| is_fundamental(d)) {
            assert_eq!(sweep.class_number(disc(d)), Some(class_number_forms(disc(d))), "D = {d}");
        }
    }

    #[test]
    fn census_independent_of_workers() {
        let one = census(30_000, 1).unwrap();
        for w in [2, 3, 7, 16] {
            assert_eq!(census(30_000, w).unwrap(), one, "workers = {w}");
        }
    }

    #[test]
    fn census_monotone_in_bound() {
        let bounds = [3u64, 50, 400, 2500, 9000];
        let tables: Vec<_> = bounds.iter().map(|&x| census(x, 2).unwrap()).collect();
        for pair in tables.windows(2) {
            for (h, row) in &pair[0].rows {
                assert!(row.count <= pair[1].count(*h));
            }
        }
    }

    #[test]
    fn census_total_matches_direct_scan() {
        for x in [3u64, 4, 100, 5000, 20_000] {
            let direct = (3..=x as i64).filter(|&n| is_fundamental(-n)).count() as u64;
            let t = census(x, 2).unwrap();
            assert_eq!(t.total(), direct, "X = {x}");
            assert!(t.rows.values().all(|r| r.max_abs_disc <= x));
        }
    }

    #[test]
    fn partition_covers_range_once() {
        for (x, w) in [(3u64, 1usize), (3, 8), (200, 3), (170_000, 8), (1_000_000, 5)] {
            let chunks = partition_leading(x, w);
            assert!(chunks.len() <= w);
            assert_eq!(chunks[0].0, 1);
            assert_eq!(chunks.last().unwrap().1, (x / 3).sqrt());
            for pair in chunks.windows(2) {
                assert_eq!(pair[0].1 + 1, pair[1].0);
            }
        }
    }

    #[test]
    fn watkins_verdicts() {
        let reference = load_watkins().unwrap();
        let checks = verify_watkins(&census(200, 1).unwrap(), &reference);
        assert_eq!(checks[0], WatkinsCheck { h: 1, expected: 9, actual: 9, verdict: Verdict::Match });
        assert!(checks[1..].iter().all(|c| c.verdict == Verdict::Inconclusive));

        let checks = verify_watkins(&census(3, 1).unwrap(), &reference);
        assert_eq!(checks[0].verdict, Verdict::Inconclusive);
        assert_eq!(checks[0].actual, 1);

        let mut tampered = census(1000, 1).unwrap();
        tampered.rows.get_mut(&2).unwrap().count = 17;
        let checks = verify_watkins(&tampered, &reference);
        assert_eq!(checks[1].verdict, Verdict::Mismatch);
    }
}
