//! Named verification suites that pair every identity, bijection, and
//! distributional claim with an executable check and report the results as
//! machine-readable tables.
//!
//! Suites that share a random corpus (`recursion-oracle` with `distribution`,
//! `betke-mcmullen` with `box-unimodal`) reseed a deterministic generator
//! from the same configuration, so running them separately still exercises
//! identical cases.

use std::collections::HashSet;
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::colored::{
    all_colored, bad_free_descent_poly, colored_derangement_alternating, colored_derangement_poly,
    colored_eulerian, delete_bad, insert_bad, psi, psi_inverse, ColoredPermutation,
};
use crate::error::{Error, Result};
use crate::inversion::{
    enumerate_all, enumerate_restricted, interlacing_certificate, s_derangement_enum,
    s_derangement_enum_descents, s_derangement_recursive, s_eulerian, s_eulerian_descents,
    InversionSequence, SSequence,
};
use crate::order::{is_reflexive, OrderPolytope};
use crate::perm::{
    all_derangements, derangement_poly, derangement_to_inversion, inversion_to_derangement,
    smirnoff_descent_poly,
};
use crate::poly::IntPolynomial;
use crate::poset::{enumerate_nonisomorphic, Poset};
use crate::roots::interlaces;
use crate::simplex::{face_mu, rem_map, LatticeSimplex, PointEnumerator};

/// Every suite name accepted by [`run_suite`], in canonical order.
pub const SUITE_NAMES: &[&str] = &[
    "derangement-bijection",
    "bijection-example",
    "colored-bijection-example",
    "box-formula",
    "recursion-oracle",
    "distribution",
    "smirnoff",
    "colored-identities",
    "decomposition-real-rooted",
    "faces",
    "betke-mcmullen",
    "remark-values",
    "ranked-posets",
    "box-unimodal",
];

const DEFAULT_SEED: u64 = 1729;

/// Volume ceiling below which the box-formula suite also replays the
/// height-preserving bijection point by point.
const REM_BIJECTION_CAP: u64 = 300;

/// Bounds that override a suite's built-in case ranges.
#[derive(Clone, Debug, Default)]
pub struct SuiteConfig {
    /// Largest sequence length or poset size to exercise.
    pub max_n: Option<usize>,
    /// Largest sequence entry (or color modulus) to exercise.
    pub max_entry: Option<u64>,
    /// Number of random cases for sampled suites.
    pub cases: Option<usize>,
    /// Seed for the deterministic case generator.
    pub seed: Option<u64>,
}

impl SuiteConfig {
    fn n(&self, default: usize) -> usize {
        self.max_n.unwrap_or(default)
    }

    fn entry(&self, default: u64) -> u64 {
        self.max_entry.unwrap_or(default)
    }

    fn cases_or(&self, default: usize) -> usize {
        self.cases.unwrap_or(default)
    }

    fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.unwrap_or(DEFAULT_SEED))
    }
}

/// One executed check: what was asked, what was expected, what happened.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Check {
    pub id: String,
    pub parameters: String,
    pub expected: String,
    pub actual: String,
    pub passed: bool,
}

/// The outcome of one suite run.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub duration_ms: u128,
}

impl VerificationReport {
    /// True when every check in the suite passed.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|check| check.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|check| !check.passed).count()
    }

    /// One-line human-readable summary.
    pub fn summary_line(&self) -> String {
        let total = self.checks.len();
        let ok = total - self.failed_count();
        format!(
            "{}: {} ({ok}/{total} checks, {} ms)",
            self.suite,
            if self.passed() { "PASS" } else { "FAIL" },
            self.duration_ms
        )
    }

    /// Full report as a JSON document.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "suite": self.suite,
            "passed": self.passed(),
            "total": self.checks.len(),
            "failed": self.failed_count(),
            "duration_ms": self.duration_ms,
            "checks": self.checks.iter().map(|check| serde_json::json!({
                "id": check.id,
                "parameters": check.parameters,
                "expected": check.expected,
                "actual": check.actual,
                "passed": check.passed,
            })).collect::<Vec<_>>(),
        })
    }

    /// Full report as CSV, one check per row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,check,parameters,expected,actual,passed\n");
        for check in &self.checks {
            let row = [
                self.suite.as_str(),
                check.id.as_str(),
                check.parameters.as_str(),
                check.expected.as_str(),
                check.actual.as_str(),
                if check.passed { "true" } else { "false" },
            ];
            let mut first = true;
            for field in row {
                if !first {
                    out.push(',');
                }
                first = false;
                out.push_str(&csv_escape(field));
            }
            out.push('\n');
        }
        out
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

#[derive(Default)]
struct Recorder {
    checks: Vec<Check>,
}

impl Recorder {
    /// Records an equality check between an expected and an actual value.
    fn eq<T: PartialEq + std::fmt::Display>(
        &mut self,
        id: &str,
        parameters: String,
        expected: T,
        actual: T,
    ) {
        let passed = expected == actual;
        self.checks.push(Check {
            id: id.to_string(),
            parameters,
            expected: expected.to_string(),
            actual: actual.to_string(),
            passed,
        });
    }

    /// Records a propositional check described in words.
    fn claim(&mut self, id: &str, parameters: String, description: &str, holds: bool) {
        self.checks.push(Check {
            id: id.to_string(),
            parameters,
            expected: description.to_string(),
            actual: if holds {
                description.to_string()
            } else {
                format!("NOT: {description}")
            },
            passed: holds,
        });
    }

    /// Records a check with explicitly rendered expected/actual strings.
    fn detail(&mut self, id: &str, parameters: String, expected: String, actual: String, passed: bool) {
        self.checks.push(Check {
            id: id.to_string(),
            parameters,
            expected,
            actual,
            passed,
        });
    }
}

/// Runs the named suite and reports every check it performed.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<VerificationReport> {
    let start = Instant::now();
    let checks = match name {
        "derangement-bijection" => suite_derangement_bijection(config)?,
        "bijection-example" => suite_bijection_example()?,
        "colored-bijection-example" => suite_colored_bijection_example()?,
        "box-formula" => suite_box_formula(config)?,
        "recursion-oracle" => suite_recursion_oracle(config)?,
        "distribution" => suite_distribution(config)?,
        "smirnoff" => suite_smirnoff(config)?,
        "colored-identities" => suite_colored_identities(config)?,
        "decomposition-real-rooted" => suite_decomposition_real_rooted(config)?,
        "faces" => suite_faces(config)?,
        "betke-mcmullen" => suite_betke_mcmullen(config)?,
        "remark-values" => suite_remark_values()?,
        "ranked-posets" => suite_ranked_posets(config)?,
        "box-unimodal" => suite_box_unimodal(config)?,
        other => {
            return Err(Error::invalid(format!(
                "unknown suite '{other}'; expected one of {}",
                SUITE_NAMES.join(", ")
            )))
        }
    };
    Ok(VerificationReport {
        suite: name.to_string(),
        checks,
        duration_ms: start.elapsed().as_millis(),
    })
}

/// Runs every suite in canonical order.
pub fn run_all(config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name, config))
        .collect()
}

/// All weakly positive sequences with length up to `max_len` and entries up
/// to `max_entry`, in lexicographic order by length then entries.
fn all_bounds(max_len: usize, max_entry: u64) -> Vec<SSequence> {
    let mut out = Vec::new();
    for n in 1..=max_len {
        let mut entries = vec![1u64; n];
        'odometer: loop {
            out.push(SSequence::new(entries.clone()).expect("positive entries"));
            let mut i = n;
            loop {
                if i == 0 {
                    break 'odometer;
                }
                i -= 1;
                if entries[i] < max_entry {
                    entries[i] += 1;
                    continue 'odometer;
                }
                entries[i] = 1;
            }
        }
    }
    out
}

fn random_bounds(rng: &mut ChaCha8Rng, count: usize, max_n: usize, max_entry: u64) -> Vec<SSequence> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(1..=max_n.max(1));
            let entries = (0..n).map(|_| rng.gen_range(1..=max_entry.max(1))).collect();
            SSequence::new(entries).expect("positive entries")
        })
        .collect()
}

/// The shared random corpus for the recursion-oracle and distribution suites.
fn derangement_corpus(config: &SuiteConfig) -> Vec<SSequence> {
    let mut rng = config.rng();
    random_bounds(&mut rng, config.cases_or(500), config.n(6), config.entry(6))
}

/// The shared poset/weight corpus for the betke-mcmullen and box-unimodal
/// suites: every nonisomorphic naturally labeled poset with unit weights
/// plus the configured number of random weight vectors.
fn poset_corpus(config: &SuiteConfig) -> Result<Vec<(Poset, SSequence)>> {
    let mut rng = config.rng();
    let cases = config.cases_or(20);
    let max_entry = config.entry(3);
    let mut out = Vec::new();
    for n in 1..=config.n(4) {
        for poset in enumerate_nonisomorphic(n)? {
            out.push((poset.clone(), SSequence::new(vec![1; n])?));
            for _ in 0..cases {
                let entries = (0..n).map(|_| rng.gen_range(1..=max_entry.max(1))).collect();
                out.push((poset.clone(), SSequence::new(entries)?));
            }
        }
    }
    Ok(out)
}

/// Cycle bijection between restricted sequences and derangements:
/// image distinctness, statistic transport, round trips, and the resulting
/// polynomial identity, for each length.
fn suite_derangement_bijection(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for n in 2..=config.n(7) {
        let bound = SSequence::derangement_bound(n)?;
        let restricted = enumerate_restricted(&bound);
        let derangements = all_derangements(n)?;
        let mut images = Vec::with_capacity(restricted.len());
        let mut ok = true;
        let mut first = String::new();
        for e in &restricted {
            let pi = inversion_to_derangement(e)?;
            let round = derangement_to_inversion(&pi)?;
            let good = pi.is_derangement() && e.descents() == pi.excedances() && &round == e;
            if !good && ok {
                ok = false;
                first = format!("fails at e = {e} (image {pi})");
            }
            images.push(pi.values().to_vec());
        }
        images.sort();
        images.dedup();
        let injective = images.len() == restricted.len();
        rec.detail(
            "cycle-bijection",
            format!("n={n}"),
            format!(
                "all {} restricted sequences map to distinct derangements with des = exc and round trip",
                restricted.len()
            ),
            if ok && injective {
                format!("all {} map correctly", restricted.len())
            } else if !ok {
                first
            } else {
                format!("only {} distinct images", images.len())
            },
            ok && injective,
        );
        rec.eq(
            "image-count",
            format!("n={n}"),
            derangements.len(),
            images.len(),
        );
        rec.eq(
            "derangement-polynomial",
            format!("n={n}"),
            &derangement_poly(n)?,
            &s_derangement_enum(&bound),
        );
    }
    Ok(rec.checks)
}

/// The worked cycle bijection example: padded sequence (0,1,0,3,2,0) maps to the
/// derangement 34521 with cycles (1,3,5)(2,4).
fn suite_bijection_example() -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    let bound = SSequence::derangement_bound(5)?;
    let e = InversionSequence::new(vec![1, 0, 3, 2], bound)?;
    let pi = inversion_to_derangement(&e)?;
    let word: String = pi.values().iter().map(|v| v.to_string()).collect();
    rec.detail(
        "maps-to",
        format!("e = {e}"),
        "34521".to_string(),
        word.clone(),
        word == "34521",
    );
    let cycles = pi.cycles();
    rec.detail(
        "cycles",
        format!("image {pi}"),
        "[[1, 3, 5], [2, 4]]".to_string(),
        format!("{cycles:?}"),
        cycles == vec![vec![1, 3, 5], vec![2, 4]],
    );
    rec.eq(
        "statistic-transport",
        "des(e) against exc(image)".to_string(),
        e.descents(),
        pi.excedances(),
    );
    rec.eq("descent-count", format!("e = {e}"), 3, e.descents());
    rec.claim(
        "round-trip",
        format!("image {pi}"),
        "inverse map recovers e",
        derangement_to_inversion(&pi)? == e,
    );
    Ok(rec.checks)
}

/// The worked colored insertion example together with the colored bijection
/// on a small instance.
fn suite_colored_bijection_example() -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    let reduced = ColoredPermutation::parse("2^2 1^1 3^0", 3)?;
    let expected = ColoredPermutation::parse("1^0 5^2 2^1 3^1 4^1 6^0", 3)?;
    let inserted = insert_bad(&reduced, &[1, 3, 4], 6)?;
    rec.eq(
        "insert-bad",
        "n=6, r=3, T={1,3,4}, sigma=2^2 1^1 3^0".to_string(),
        &expected,
        &inserted,
    );
    rec.detail(
        "bad-numbers",
        format!("sigma = {inserted}"),
        "[1, 3, 4]".to_string(),
        format!("{:?}", inserted.bad_numbers()),
        inserted.bad_numbers() == vec![1, 3, 4],
    );
    let (back, bad) = delete_bad(&inserted);
    rec.claim(
        "delete-round-trip",
        format!("sigma = {inserted}"),
        "deletion recovers the reduced word and T",
        back == reduced && bad == vec![1, 3, 4],
    );
    rec.eq(
        "descents-preserved",
        "des before and after insertion".to_string(),
        reduced.descents(),
        inserted.descents(),
    );

    let sigma = ColoredPermutation::parse("3^1 1^0 2^2", 3)?;
    let image = psi(&sigma)?;
    let target = InversionSequence::new(vec![2, 0, 5], SSequence::colored_bound(3, 3)?)?;
    rec.eq("psi", format!("sigma = {sigma}"), &target, &image);
    rec.eq(
        "psi-statistic",
        "des(sigma) against asc(psi(sigma))".to_string(),
        sigma.descents(),
        image.ascents(),
    );
    rec.claim(
        "psi-round-trip",
        format!("sigma = {sigma}"),
        "psi inverse recovers sigma",
        psi_inverse(&image)? == sigma,
    );
    Ok(rec.checks)
}

/// Box-point heights of the lecture hall parallelepiped against the ascent
/// and descent polynomials of restricted sequences, h* against the Eulerian
/// polynomial, and (for small volumes) the height-preserving bijection.
fn suite_box_formula(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    let enumerator = PointEnumerator::new();
    for s in all_bounds(config.n(5), config.entry(6)) {
        let simplex = LatticeSimplex::lecture_hall(&s)?;
        let (hstar, local) = enumerator.hstar_pair(&simplex)?;
        let asc = s_derangement_enum(&s);
        let des = s_derangement_enum_descents(&s);
        let eulerian = s_eulerian(&s);
        let ok = local == asc && asc == des && hstar == eulerian;
        rec.detail(
            "box-polynomial",
            format!("s={s}"),
            "open heights = ascent polynomial = descent polynomial and h* = E".to_string(),
            if ok {
                format!("agree: l* = {}, h* = {}", local, hstar)
            } else {
                format!("l* = {local}, asc = {asc}, des = {des}, h* = {hstar}, E = {eulerian}")
            },
            ok,
        );

        if s.product_u64().is_some_and(|v| v <= REM_BIJECTION_CAP) {
            let points = enumerator.half_open_points(&simplex)?;
            let mut ok = true;
            let mut first = String::new();
            let mut images = Vec::with_capacity(points.len());
            let mut open_images = Vec::new();
            for point in &points {
                let e = rem_map(point, &s)?;
                if e.descents() != point.height() && ok {
                    ok = false;
                    first = format!("height {} maps to des {}", point.height(), e.descents());
                }
                if point.is_interior() {
                    open_images.push(e.entries().to_vec());
                }
                images.push(e.entries().to_vec());
            }
            images.sort();
            images.dedup();
            open_images.sort();
            let mut all: Vec<_> = enumerate_all(&s)
                .iter()
                .map(|e| e.entries().to_vec())
                .collect();
            all.sort();
            let mut restricted: Vec<_> = enumerate_restricted(&s)
                .iter()
                .map(|e| e.entries().to_vec())
                .collect();
            restricted.sort();
            let bijective = images == all && open_images == restricted;
            rec.detail(
                "rem-bijection",
                format!("s={s}"),
                format!(
                    "box points biject onto all {} sequences with height = des; open points onto the {} restricted ones",
                    all.len(),
                    restricted.len()
                ),
                if ok && bijective {
                    "bijection verified".to_string()
                } else if !ok {
                    first
                } else {
                    "image sets differ".to_string()
                },
                ok && bijective,
            );
        }
    }
    Ok(rec.checks)
}

/// Column recursion against direct enumeration on a random corpus, plus the
/// interlacing certificate on a slice of it.
fn suite_recursion_oracle(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for (idx, s) in derangement_corpus(config).iter().enumerate() {
        rec.eq(
            "recursion",
            format!("s={s}"),
            &s_derangement_enum(s),
            &s_derangement_recursive(s),
        );
        if idx < 50 {
            let columns = interlacing_certificate(s);
            let mut interlacing = true;
            let mut note = String::new();
            for pair in columns.windows(2) {
                match interlaces(&pair[0], &pair[1]) {
                    Ok(true) => {}
                    Ok(false) => {
                        interlacing = false;
                        note = format!("{} does not interlace {}", pair[0], pair[1]);
                        break;
                    }
                    Err(err) => {
                        interlacing = false;
                        note = format!("interlacing test failed: {err}");
                        break;
                    }
                }
            }
            // Column 0 collects the sequences whose last ratio ties the back
            // padding; the derangement polynomial is the sum over the rest.
            let sum = columns
                .iter()
                .skip(1)
                .fold(IntPolynomial::zero(), |acc, col| &acc + col);
            let matches = sum == s_derangement_recursive(s);
            rec.detail(
                "certificate",
                format!("s={s}"),
                "consecutive recursion columns interlace and sum to d".to_string(),
                if interlacing && matches {
                    format!("{} columns verified", columns.len())
                } else if !interlacing {
                    note
                } else {
                    format!("columns sum to {sum}")
                },
                interlacing && matches,
            );
        }
    }
    for entries in [vec![1], vec![2], vec![2, 2], vec![1, 2, 3], vec![1, 1, 1, 1]] {
        let s = SSequence::new(entries)?;
        rec.eq(
            "recursion",
            format!("s={s}"),
            &s_derangement_enum(&s),
            &s_derangement_recursive(&s),
        );
    }
    Ok(rec.checks)
}

/// Distributional properties of the derangement polynomials over the same
/// random corpus as the recursion-oracle suite.
fn suite_distribution(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for s in derangement_corpus(config) {
        let n = s.len();
        let d = s_derangement_recursive(&s);
        let params = format!("s={s}");
        rec.claim(
            "real-rooted",
            params.clone(),
            "d has only real roots",
            d.is_real_rooted(),
        );
        rec.claim(
            "symmetric",
            params.clone(),
            &format!("d is symmetric with respect to degree {}", n + 1),
            d.is_symmetric(n + 1),
        );
        rec.claim("unimodal", params.clone(), "d is unimodal", d.is_unimodal());
        rec.claim(
            "log-concave",
            params.clone(),
            "d is log-concave",
            d.is_log_concave(),
        );
        let gamma_ok = d
            .gamma_vector(n + 1)
            .map(|g| g.is_nonnegative())
            .unwrap_or(false);
        rec.claim(
            "gamma-nonnegative",
            params.clone(),
            "gamma vector of d is nonnegative",
            gamma_ok,
        );
        rec.eq(
            "eulerian-equidistributed",
            params,
            &s_eulerian(&s),
            &s_eulerian_descents(&s),
        );
    }
    Ok(rec.checks)
}

/// Descent polynomials of cyclically rooted words with distinct adjacent
/// letters against constant-bound derangement polynomials.
fn suite_smirnoff(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for n in 1..=config.n(5) {
        for r in 1..=config.entry(4) {
            let s = SSequence::constant_bound(n, r)?;
            rec.eq(
                "edgewise",
                format!("n={n}, r={r}"),
                &smirnoff_descent_poly(n + 1, r),
                &s_derangement_recursive(&s),
            );
        }
    }
    Ok(rec.checks)
}

fn colored_state_count(n: usize, r: u64) -> Option<u64> {
    let mut total = 1u64;
    for k in 1..=n as u64 {
        total = total.checked_mul(r)?.checked_mul(k)?;
    }
    Some(total)
}

/// Colored Eulerian and derangement identities: excedance equidistribution,
/// the alternating-sum formula, the two-term derangement sum, its symmetric
/// decomposition, and the bad-free descent identity.
fn suite_colored_identities(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for n in 1..=config.n(5) {
        for r in 1..=config.entry(3) {
            if colored_state_count(n, r).is_none_or(|states| states > 100_000) {
                continue;
            }
            let params = format!("n={n}, r={r}");
            let colored_bound = SSequence::colored_bound(n, r)?;
            rec.eq(
                "colored-eulerian",
                params.clone(),
                &colored_eulerian(n, r)?,
                &s_eulerian(&colored_bound),
            );

            let mut by_excedance = vec![BigInt::from(0); n + 1];
            for sigma in all_colored(n, r)? {
                by_excedance[sigma.excedances()] += 1;
            }
            rec.eq(
                "equidistributed",
                params.clone(),
                &colored_eulerian(n, r)?,
                &IntPolynomial::new(by_excedance),
            );

            let direct = colored_derangement_poly(n, r)?;
            rec.eq(
                "alternating-formula",
                params.clone(),
                &direct,
                &colored_derangement_alternating(n, r)?,
            );

            let first = if n >= 2 {
                let shifted = SSequence::new((2..=n as u64).map(|k| k * r).collect())?;
                s_derangement_recursive(&shifted)
            } else {
                IntPolynomial::zero()
            };
            let second = s_derangement_recursive(&colored_bound);
            rec.eq(
                "derangement-sum",
                params.clone(),
                &direct,
                &(&first + &second),
            );

            match direct.symmetric_decomposition(n) {
                Ok((a, b)) => {
                    rec.eq("decomposition-first", params.clone(), &first, &a);
                    rec.eq("decomposition-second", params.clone(), &second, &b.shifted_up(1));
                }
                Err(err) => {
                    rec.detail(
                        "decomposition-first",
                        params.clone(),
                        "symmetric decomposition exists".to_string(),
                        format!("decomposition failed: {err}"),
                        false,
                    );
                }
            }

            if n <= 4 {
                rec.eq(
                    "bad-free",
                    params,
                    &direct,
                    &bad_free_descent_poly(n, r)?,
                );
            }
        }
    }
    Ok(rec.checks)
}

/// Real-rootedness of both parts of the symmetric decomposition of the
/// colored derangement polynomials.
fn suite_decomposition_real_rooted(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for n in 1..=config.n(5) {
        for r in 1..=config.entry(3) {
            if colored_state_count(n, r).is_none_or(|states| states > 100_000) {
                continue;
            }
            let params = format!("n={n}, r={r}");
            let direct = colored_derangement_poly(n, r)?;
            let (a, b) = direct.symmetric_decomposition(n)?;
            rec.claim(
                "part-a-real-rooted",
                params.clone(),
                &format!("symmetric part {a} has only real roots"),
                a.is_real_rooted(),
            );
            rec.claim(
                "part-b-real-rooted",
                params,
                &format!("complementary part {b} has only real roots"),
                b.is_real_rooted(),
            );
        }
    }
    Ok(rec.checks)
}

/// Local h* of every simplex face against the gcd-reduced derangement
/// polynomial, with distributional flags for each distinct face polynomial.
fn suite_faces(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    let enumerator = PointEnumerator::new();
    let mut vetted: HashSet<IntPolynomial> = HashSet::new();
    for s in all_bounds(config.n(5), config.entry(6)) {
        let simplex = LatticeSimplex::lecture_hall(&s)?;
        let n = s.len();
        let mut count = 0usize;
        let mut gcd_ok = true;
        let mut gcd_first = String::new();
        let mut dist_ok = true;
        let mut dist_first = String::new();
        for mask in 0u64..(1 << (n + 1)) {
            if mask.count_ones() < 2 {
                continue;
            }
            let indices: Vec<usize> = (0..=n).filter(|i| mask >> i & 1 == 1).collect();
            let mu = face_mu(&s, &indices)?;
            let formula = s_derangement_recursive(&mu);
            let direct = enumerator.local_hstar(&simplex.face(&indices)?)?;
            count += 1;
            if formula != direct && gcd_ok {
                gcd_ok = false;
                gcd_first = format!(
                    "vertices {indices:?}: formula d^({mu}) = {formula} but direct l* = {direct}"
                );
            }
            if !vetted.contains(&direct) {
                if !direct.is_real_rooted() || !direct.is_unimodal() {
                    if dist_ok {
                        dist_ok = false;
                        dist_first = format!("vertices {indices:?}: l* = {direct}");
                    }
                } else {
                    vetted.insert(direct);
                }
            }
        }
        rec.detail(
            "face-gcd",
            format!("s={s}"),
            format!("all {count} faces match the gcd formula"),
            if gcd_ok {
                format!("all {count} match")
            } else {
                gcd_first
            },
            gcd_ok,
        );
        rec.detail(
            "face-distribution",
            format!("s={s}"),
            format!("all {count} face polynomials are real-rooted and unimodal"),
            if dist_ok {
                format!("all {count} pass")
            } else {
                dist_first
            },
            dist_ok,
        );
    }
    Ok(rec.checks)
}

/// Triangulation-based h* against direct Ehrhart inversion over the shared
/// poset corpus.
fn suite_betke_mcmullen(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for (poset, s) in poset_corpus(config)? {
        let covers = poset.covers();
        let op = OrderPolytope::new(poset, s)?;
        rec.eq(
            "betke-mcmullen",
            format!("covers={covers:?}, s={}", op.weights()),
            &op.ehrhart_hstar()?,
            &op.betke_mcmullen_hstar()?,
        );
    }
    Ok(rec.checks)
}

/// The three-element counterexample poset with symmetric but not reflexive
/// h*, together with the five two-element candidates of normalized volume 4.
fn suite_remark_values() -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    let poset = Poset::new(3, &[(1, 3), (2, 3)])?;
    let ranks = poset.rank_sequence()?;
    rec.detail(
        "remark-rank",
        "covers (1,3),(2,3)".to_string(),
        "[1, 1, 2]".to_string(),
        format!("{ranks:?}"),
        ranks == vec![1, 1, 2],
    );
    let op = OrderPolytope::new(poset, SSequence::new(ranks)?)?;
    let hstar = op.ehrhart_hstar()?;
    let expected = IntPolynomial::from_i64s(&[1, 2, 1]);
    let params = "covers (1,3),(2,3), s=1,1,2".to_string();
    rec.eq("remark-hstar", params.clone(), &expected, &hstar);
    rec.eq(
        "remark-bm",
        params.clone(),
        &expected,
        &op.betke_mcmullen_hstar()?,
    );
    rec.claim(
        "remark-symmetric",
        params.clone(),
        "h* is symmetric with respect to 2 = n - 1",
        is_reflexive(&hstar, 2),
    );
    rec.detail(
        "remark-degree",
        params.clone(),
        "2".to_string(),
        format!("{:?}", hstar.degree()),
        hstar.degree() == Some(2),
    );
    rec.claim(
        "remark-unimodal",
        params,
        "h* is unimodal",
        hstar.is_unimodal(),
    );

    let target = IntPolynomial::from_i64s(&[1, 3]);
    let candidates: Vec<(Poset, Vec<u64>)> = vec![
        (Poset::antichain(2), vec![1, 2]),
        (Poset::antichain(2), vec![2, 1]),
        (Poset::chain(2), vec![1, 4]),
        (Poset::chain(2), vec![4, 1]),
        (Poset::chain(2), vec![2, 2]),
    ];
    for (q, mu) in candidates {
        let covers = q.covers();
        let op = OrderPolytope::new(q, SSequence::new(mu.clone())?)?;
        let hstar = op.ehrhart_hstar()?;
        let params = format!("covers={covers:?}, mu={mu:?}");
        rec.eq("q-mu-hstar", params.clone(), &target, &hstar);
        rec.eq(
            "q-mu-volume",
            params.clone(),
            BigInt::from(4),
            hstar.eval_at_one(),
        );
        rec.claim(
            "q-mu-not-reflexive",
            params,
            "h* is not symmetric with respect to 2",
            !is_reflexive(&hstar, 2),
        );
    }
    Ok(rec.checks)
}

/// Symmetry of h* for ranked posets weighted by rank + 1, unimodality and
/// the minimum-deletion reduction when the minimum is unique.
fn suite_ranked_posets(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for n in 1..=config.n(5) {
        for poset in enumerate_nonisomorphic(n)? {
            if !poset.is_ranked() {
                continue;
            }
            let ranks = poset.rank_sequence()?;
            let op = OrderPolytope::new(poset.clone(), SSequence::new(ranks.clone())?)?;
            let hstar = op.ehrhart_hstar()?;
            let params = format!("covers={:?}, s={ranks:?}", poset.covers());
            rec.claim(
                "rank-symmetric",
                params.clone(),
                &format!("h* = {hstar} is symmetric with respect to {}", n - 1),
                hstar.is_symmetric(n - 1),
            );
            if let Some(min) = poset.unique_minimum() {
                rec.claim(
                    "unique-min-unimodal",
                    params.clone(),
                    &format!("h* = {hstar} is unimodal"),
                    hstar.is_unimodal(),
                );
                if n >= 2 {
                    let reduced = poset.delete(min);
                    let mut rest = ranks.clone();
                    rest.remove(min - 1);
                    let op2 = OrderPolytope::new(reduced, SSequence::new(rest)?)?;
                    rec.eq("min-reduction", params, &hstar, &op2.ehrhart_hstar()?);
                }
            }
        }
    }
    Ok(rec.checks)
}

/// Per-face box polynomial report over the shared poset corpus: every face
/// of every canonical triangulation must be unimodal and real-rooted.
fn suite_box_unimodal(config: &SuiteConfig) -> Result<Vec<Check>> {
    let mut rec = Recorder::default();
    for (poset, s) in poset_corpus(config)? {
        let covers = poset.covers();
        let op = OrderPolytope::new(poset, s)?;
        let report = op.box_unimodality_report()?;
        let total = report.rows.len();
        let failure = report.first_failure();
        rec.detail(
            "box-unimodal",
            format!("covers={covers:?}, s={}", op.weights()),
            format!("all {total} faces have unimodal, real-rooted box polynomials"),
            match failure {
                None => format!("all {total} pass"),
                Some(row) => format!("face {:#b} has box polynomial {}", row.face, row.local),
            },
            failure.is_none(),
        );
    }
    Ok(rec.checks)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tiny() -> SuiteConfig {
        SuiteConfig {
            max_n: Some(3),
            max_entry: Some(3),
            cases: Some(12),
            seed: Some(7),
        }
    }

    #[test]
    fn every_suite_runs_and_passes_at_reduced_scale() {
        for name in SUITE_NAMES {
            let report = run_suite(name, &tiny()).unwrap();
            let failures: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .take(5)
                .map(|c| format!("{} [{}]: expected {}, got {}", c.id, c.parameters, c.expected, c.actual))
                .collect();
            assert!(
                report.passed(),
                "{}\n{}",
                report.summary_line(),
                failures.join("\n")
            );
            assert!(!report.checks.is_empty(), "{name} produced no checks");
        }
    }

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("no-such-suite", &tiny()).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let a = run_suite("recursion-oracle", &tiny()).unwrap();
        let b = run_suite("recursion-oracle", &tiny()).unwrap();
        let rows = |r: &VerificationReport| {
            r.checks
                .iter()
                .map(|c| format!("{}|{}|{}|{}", c.id, c.parameters, c.expected, c.actual))
                .collect::<Vec<_>>()
        };
        assert_eq!(rows(&a), rows(&b));
    }

    #[test]
    fn shared_corpora_line_up() {
        let config = tiny();
        assert_eq!(
            derangement_corpus(&config)
                .iter()
                .map(|s| s.entries().to_vec())
                .collect::<Vec<_>>(),
            derangement_corpus(&config)
                .iter()
                .map(|s| s.entries().to_vec())
                .collect::<Vec<_>>()
        );
        let first = poset_corpus(&config).unwrap();
        let second = poset_corpus(&config).unwrap();
        assert_eq!(first.len(), second.len());
        for ((p1, s1), (p2, s2)) in first.iter().zip(second.iter()) {
            assert_eq!(p1.covers(), p2.covers());
            assert_eq!(s1.entries(), s2.entries());
        }
    }

    #[test]
    fn csv_escapes_embedded_separators() {
        let report = VerificationReport {
            suite: "demo".to_string(),
            checks: vec![Check {
                id: "x".to_string(),
                parameters: "s=1,2".to_string(),
                expected: "a \"quote\"".to_string(),
                actual: "line\nbreak".to_string(),
                passed: true,
            }],
            duration_ms: 0,
        };
        let csv = report.to_csv();
        assert!(csv.contains("\"s=1,2\""));
        assert!(csv.contains("\"a \"\"quote\"\"\""));
        assert!(csv.contains("\"line\nbreak\""));
    }

    #[test]
    fn json_report_carries_every_check() {
        let report = run_suite("bijection-example", &SuiteConfig::default()).unwrap();
        let json = report.to_json();
        assert_eq!(json["suite"], "bijection-example");
        assert_eq!(json["passed"], true);
        assert_eq!(
            json["checks"].as_array().unwrap().len(),
            report.checks.len()
        );
        // The JSON form is lossless: it parses back into an equal report.
        let back: VerificationReport = serde_json::from_value(json).unwrap();
        assert_eq!(back, report);
    }

    #[test]
    fn empty_report_renders_a_bare_csv_header() {
        let report = VerificationReport {
            suite: "empty".to_string(),
            checks: Vec::new(),
            duration_ms: 0,
        };
        assert_eq!(report.to_csv(), "suite,check,parameters,expected,actual,passed\n");
        assert!(report.passed());
    }
}
