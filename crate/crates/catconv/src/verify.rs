//! The identity registry: every supported identity is a runnable check.
//!
//! Each identity has a *numeric* mode (two exact closed-form routes
//! compared for equality), an *exhaustive* mode (enumerated path families
//! compared against closed forms, with full bijection audits where a map is
//! involved), or both:
//!
//! | id                | numeric                                            | exhaustive |
//! |-------------------|----------------------------------------------------|------------|
//! | `thm1`            | `sum C_{2i}C_{2j} = 4^n C_n`                       | even-zeroed paths to `(4n+1, 1)` |
//! | `thm2`            | `sum C_{2i}B_{2j} = 4^n B_n`                       | even-zeroed paths of length `4n` |
//! | `thm8`            | alternating `B` convolution `= 4^n B_n`            | — |
//! | `thm9`            | `sum (B_{2i}-C_{2i})B_{2j} = sum B_{2i+1}B_{2j-1}` | even/odd pair families with the splice bijection |
//! | `lemma3`          | —                                                  | even-zeroed balanced `2n`-paths vs `C_{2n}`, with bijection audit |
//! | `lemma4`          | `2 sum C_{2i}C_{2j}B_{2k} = B_{2n+1}`              | balanced `(2n+1)`-paths grouped by the leftmost odd excursion |
//! | `lemma5`          | —                                                  | paths never returning to the axis vs `B_n` |
//! | `lemma6a`         | —                                                  | even-zeroed length-`4n` paths grouped by rightmost intercept |
//! | `lemma6b`         | —                                                  | even-zeroed paths to `(4n+1, 1)` grouped by rightmost intercept |
//! | `lemma7`          | —                                                  | even-zeroed length-`4n` count plus the `16 S_{n-1} - 8 L_{n-1}` accounting |
//! | `wrong-extensions`| —                                                  | the discarded 4-step extensions as an explicit set equality |
//! | `cor10`           | paired-binomial sums (needs `n >= 1`)              | — |
//! | `equiv-1-2`       | `sum C_{2i}B_{2j} = (n+1) sum C_{2i}C_{2j}`        | — |
//! | `z-recursion`     | `Z_n = C_{2n}`                                     | — |
//! | `sixteen-recursion`| `sum S_i S_j = 16^n`                              | — |
//!
//! Requesting a mode an identity does not support is an error; mode `both`
//! runs whatever is supported and the report records what actually ran.
//! Reports are deterministic given `(identity, n, mode)` except for the
//! measured `elapsed` time.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::bijection::{
    chi, dyck_from_even_zeroed, even_zeroed_from_dyck, theorem9_backward, theorem9_forward,
    PairE, PairO,
};
use crate::count::{self, ExactCount};
use crate::enumerate::{
    enumerate_balanced_with_cap, enumerate_dyck_with_cap, enumerate_even_zeroed_with_cap,
};
use crate::error::Error;
use crate::path::{BalancedPath, DyckPath, Path, Sign, Step};
use crate::scan;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// One checkable identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IdentityId {
    Thm1,
    Thm2,
    Thm8,
    Thm9,
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6a,
    Lemma6b,
    Lemma7,
    Cor10,
    Equiv12,
    ZRecursion,
    SixteenRecursion,
    WrongExtensions,
}

impl IdentityId {
    pub const ALL: [IdentityId; 15] = [
        IdentityId::Thm1,
        IdentityId::Thm2,
        IdentityId::Thm8,
        IdentityId::Thm9,
        IdentityId::Lemma3,
        IdentityId::Lemma4,
        IdentityId::Lemma5,
        IdentityId::Lemma6a,
        IdentityId::Lemma6b,
        IdentityId::Lemma7,
        IdentityId::Cor10,
        IdentityId::Equiv12,
        IdentityId::ZRecursion,
        IdentityId::SixteenRecursion,
        IdentityId::WrongExtensions,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Thm1 => "thm1",
            IdentityId::Thm2 => "thm2",
            IdentityId::Thm8 => "thm8",
            IdentityId::Thm9 => "thm9",
            IdentityId::Lemma3 => "lemma3",
            IdentityId::Lemma4 => "lemma4",
            IdentityId::Lemma5 => "lemma5",
            IdentityId::Lemma6a => "lemma6a",
            IdentityId::Lemma6b => "lemma6b",
            IdentityId::Lemma7 => "lemma7",
            IdentityId::Cor10 => "cor10",
            IdentityId::Equiv12 => "equiv-1-2",
            IdentityId::ZRecursion => "z-recursion",
            IdentityId::SixteenRecursion => "sixteen-recursion",
            IdentityId::WrongExtensions => "wrong-extensions",
        }
    }

    pub fn supports_numeric(self) -> bool {
        matches!(
            self,
            IdentityId::Thm1
                | IdentityId::Thm2
                | IdentityId::Thm8
                | IdentityId::Thm9
                | IdentityId::Lemma4
                | IdentityId::Cor10
                | IdentityId::Equiv12
                | IdentityId::ZRecursion
                | IdentityId::SixteenRecursion
        )
    }

    pub fn supports_exhaustive(self) -> bool {
        matches!(
            self,
            IdentityId::Thm1
                | IdentityId::Thm2
                | IdentityId::Thm9
                | IdentityId::Lemma3
                | IdentityId::Lemma4
                | IdentityId::Lemma5
                | IdentityId::Lemma6a
                | IdentityId::Lemma6b
                | IdentityId::Lemma7
                | IdentityId::WrongExtensions
        )
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown identity '{s}'"))
    }
}

/// Check mode requested or executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    Numeric,
    Exhaustive,
    Both,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Numeric => "numeric",
            Mode::Exhaustive => "exhaustive",
            Mode::Both => "both",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "numeric" => Ok(Mode::Numeric),
            "exhaustive" => Ok(Mode::Exhaustive),
            "both" => Ok(Mode::Both),
            other => Err(format!("unknown mode '{other}'")),
        }
    }
}

/// Resource caps for a verification run. Exhaustive checks refuse to start
/// above these sizes; numeric checks refuse indices above `max_numeric_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_numeric_n: u64,
    /// Longest path length scanned by full `2^len` enumeration.
    pub max_free_len: usize,
    /// Largest parameter for balanced-path enumeration.
    pub max_balanced_param: usize,
    /// Largest parameter for Dyck-path enumeration.
    pub max_dyck_param: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            max_numeric_n: 20,
            max_free_len: 20,
            max_balanced_param: 10,
            max_dyck_param: 12,
        }
    }
}

impl Caps {
    /// Caps derived from a single enumeration budget `len`: free scans up
    /// to length `len`, balanced/Dyck parameters up to `len / 2`.
    pub fn from_budget(len: usize) -> Self {
        Caps {
            max_numeric_n: Caps::default().max_numeric_n,
            max_free_len: len,
            max_balanced_param: len / 2,
            max_dyck_param: len / 2,
        }
    }
}

/// Outcome of one identity check at one index.
///
/// `passed` holds exactly when `expected == actual` and every structural
/// assertion of the check (round trips, group counts, set equalities)
/// succeeded; `witness` is present exactly when the check failed.
/// `elapsed` is measured wall time and is the one field excluded from the
/// determinism guarantee.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub identity: IdentityId,
    pub n: u64,
    pub mode: Mode,
    pub expected: ExactCount,
    pub actual: ExactCount,
    pub passed: bool,
    pub witness: Option<Vec<String>>,
    pub elapsed: Duration,
}

impl Serialize for VerificationReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let fields = 7 + usize::from(self.witness.is_some());
        let mut state = serializer.serialize_struct("VerificationReport", fields)?;
        state.serialize_field("identity", self.identity.name())?;
        state.serialize_field("n", &self.n)?;
        state.serialize_field("mode", self.mode.name())?;
        state.serialize_field("expected", &self.expected.to_string())?;
        state.serialize_field("actual", &self.actual.to_string())?;
        state.serialize_field("passed", &self.passed)?;
        match &self.witness {
            Some(witness) => state.serialize_field("witness", witness)?,
            None => state.skip_field("witness")?,
        }
        state.serialize_field("elapsed_ms", &(self.elapsed.as_millis() as u64))?;
        state.end()
    }
}

impl VerificationReport {
    /// The stable JSON object form.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("report serialization cannot fail")
    }
}

/// Runs one identity check with default caps.
pub fn verify(id: IdentityId, n: u64, mode: Mode) -> Result<VerificationReport, Error> {
    verify_with_caps(id, n, mode, &Caps::default())
}

/// Runs one identity check under explicit caps.
pub fn verify_with_caps(
    id: IdentityId,
    n: u64,
    mode: Mode,
    caps: &Caps,
) -> Result<VerificationReport, Error> {
    let plan = preflight(id, n, mode, caps)?;
    run_planned(id, n, plan, caps)
}

/// Runs one identity over an inclusive index range with default caps.
/// Failed identities never stop the run; resource errors are detected for
/// the whole range up front.
pub fn verify_range(
    id: IdentityId,
    from: u64,
    to: u64,
    mode: Mode,
) -> Result<Vec<VerificationReport>, Error> {
    verify_range_with_caps(id, from, to, mode, &Caps::default())
}

/// Range verification under explicit caps. Indices may be evaluated
/// concurrently; the returned reports are index-ordered and identical to
/// serial execution (modulo measured times).
pub fn verify_range_with_caps(
    id: IdentityId,
    from: u64,
    to: u64,
    mode: Mode,
    caps: &Caps,
) -> Result<Vec<VerificationReport>, Error> {
    if from > to {
        return Err(Error::InvalidRange { from, to });
    }
    let indices: Vec<u64> = (from..=to).collect();
    let plans: Vec<Plan> = indices
        .iter()
        .map(|&n| preflight(id, n, mode, caps))
        .collect::<Result<_, _>>()?;

    #[cfg(feature = "parallel")]
    {
        indices
            .par_iter()
            .zip(plans)
            .map(|(&n, plan)| run_planned(id, n, plan, caps))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        indices
            .iter()
            .zip(plans)
            .map(|(&n, plan)| run_planned(id, n, plan, caps))
            .collect()
    }
}

/// Which mode flavours one verify call will execute.
#[derive(Debug, Clone, Copy)]
struct Plan {
    numeric: bool,
    exhaustive: bool,
}

fn preflight(id: IdentityId, n: u64, mode: Mode, caps: &Caps) -> Result<Plan, Error> {
    let plan = match mode {
        Mode::Numeric => {
            if !id.supports_numeric() {
                return Err(unsupported(id, mode));
            }
            Plan { numeric: true, exhaustive: false }
        }
        Mode::Exhaustive => {
            if !id.supports_exhaustive() {
                return Err(unsupported(id, mode));
            }
            Plan { numeric: false, exhaustive: true }
        }
        Mode::Both => Plan {
            numeric: id.supports_numeric(),
            exhaustive: id.supports_exhaustive(),
        },
    };
    if plan.numeric {
        if id == IdentityId::Cor10 && n == 0 {
            return Err(Error::IndexOutOfRange {
                n,
                what: "cor10 (requires n >= 1)".to_string(),
            });
        }
        if n > caps.max_numeric_n {
            return Err(Error::CapExceeded {
                requested: n as usize,
                cap: caps.max_numeric_n as usize,
            });
        }
    }
    if plan.exhaustive {
        check_exhaustive_caps(id, n, caps)?;
    }
    Ok(plan)
}

fn unsupported(id: IdentityId, mode: Mode) -> Error {
    Error::UnsupportedMode {
        identity: id.name().to_string(),
        mode: mode.name().to_string(),
    }
}

fn scaled(n: u64, mul: u64, add: u64) -> u64 {
    n.saturating_mul(mul).saturating_add(add)
}

fn check_free_len(requested: u64, caps: &Caps) -> Result<(), Error> {
    if requested > caps.max_free_len as u64 {
        return Err(Error::CapExceeded {
            requested: usize::try_from(requested).unwrap_or(usize::MAX),
            cap: caps.max_free_len,
        });
    }
    Ok(())
}

fn check_balanced_param(requested: u64, caps: &Caps) -> Result<(), Error> {
    if requested > caps.max_balanced_param as u64 {
        return Err(Error::CapExceeded {
            requested: usize::try_from(requested).unwrap_or(usize::MAX),
            cap: caps.max_balanced_param,
        });
    }
    Ok(())
}

fn check_exhaustive_caps(id: IdentityId, n: u64, caps: &Caps) -> Result<(), Error> {
    match id {
        IdentityId::Thm1 | IdentityId::Lemma6b => check_free_len(scaled(n, 4, 1), caps),
        IdentityId::Thm2 | IdentityId::Lemma6a | IdentityId::Lemma7 => {
            check_free_len(scaled(n, 4, 0), caps)
        }
        IdentityId::WrongExtensions => check_free_len(scaled(n, 4, 4), caps),
        IdentityId::Lemma5 => check_free_len(scaled(n, 2, 0), caps),
        IdentityId::Lemma3 => {
            check_balanced_param(scaled(n, 2, 0), caps)?;
            if scaled(n, 2, 0) > caps.max_dyck_param as u64 {
                return Err(Error::CapExceeded {
                    requested: usize::try_from(scaled(n, 2, 0)).unwrap_or(usize::MAX),
                    cap: caps.max_dyck_param,
                });
            }
            Ok(())
        }
        IdentityId::Lemma4 => check_balanced_param(scaled(n, 2, 1), caps),
        IdentityId::Thm9 => check_balanced_param(scaled(n, 2, 0), caps),
        _ => unreachable!("{id} has no exhaustive mode"),
    }
}

fn run_planned(
    id: IdentityId,
    n: u64,
    plan: Plan,
    caps: &Caps,
) -> Result<VerificationReport, Error> {
    let start = Instant::now();
    let numeric = plan.numeric.then(|| numeric_outcome(id, n)).transpose()?;
    let exhaustive = plan
        .exhaustive
        .then(|| exhaustive_outcome(id, n, caps))
        .transpose()?;
    let mode = match (&numeric, &exhaustive) {
        (Some(_), Some(_)) => Mode::Both,
        (Some(_), None) => Mode::Numeric,
        (None, Some(_)) => Mode::Exhaustive,
        (None, None) => unreachable!("preflight plans at least one mode"),
    };

    let mut passed = true;
    let mut witness_lines = Vec::new();
    if let Some(outcome) = &numeric {
        if !outcome.passed() {
            passed = false;
            witness_lines.extend(outcome.describe("numeric"));
        }
    }
    if let Some(outcome) = &exhaustive {
        if !outcome.passed() {
            passed = false;
            witness_lines.extend(outcome.describe("exhaustive"));
        }
    }
    let primary = exhaustive.or(numeric).expect("at least one outcome");
    Ok(VerificationReport {
        identity: id,
        n,
        mode,
        expected: primary.expected,
        actual: primary.actual,
        passed,
        witness: if passed { None } else { Some(witness_lines) },
        elapsed: start.elapsed(),
    })
}

/// Expected/actual pair plus structural failure descriptions.
struct Outcome {
    expected: ExactCount,
    actual: ExactCount,
    failures: Vec<String>,
}

impl Outcome {
    fn counts(expected: ExactCount, actual: ExactCount) -> Self {
        Outcome { expected, actual, failures: Vec::new() }
    }

    fn passed(&self) -> bool {
        self.expected == self.actual && self.failures.is_empty()
    }

    fn describe(&self, label: &str) -> Vec<String> {
        let mut lines = Vec::new();
        if self.expected != self.actual {
            lines.push(format!(
                "{label}: expected {}, actual {}",
                self.expected, self.actual
            ));
        }
        lines.extend(self.failures.iter().cloned());
        lines
    }
}

const MAX_WITNESSES: usize = 8;

fn push_failure(failures: &mut Vec<String>, line: String) {
    if failures.len() < MAX_WITNESSES {
        failures.push(line);
    } else if failures.len() == MAX_WITNESSES {
        failures.push("... further witnesses suppressed".to_string());
    }
}

fn numeric_outcome(id: IdentityId, n: u64) -> Result<Outcome, Error> {
    let outcome = match id {
        IdentityId::Thm1 => Outcome::counts(
            count::power(4, n) * count::catalan(n),
            count::shapiro_lhs(n),
        ),
        IdentityId::Thm2 => Outcome::counts(
            count::power(4, n) * count::central_binom(n),
            count::mixed_lhs(n),
        ),
        IdentityId::Thm8 => Outcome::counts(
            count::power(4, n) * count::central_binom(n),
            count::alternating_lhs(n),
        ),
        IdentityId::Thm9 => Outcome::counts(count::odd_pair_sum(n), count::even_pair_sum(n)),
        IdentityId::Lemma4 => Outcome::counts(
            count::binom(4 * n + 2, 2 * n as i64 + 1),
            count::triple_conv(n),
        ),
        IdentityId::Cor10 => {
            let (left, right) = count::corollary10_sides(n)?;
            Outcome::counts(right, left)
        }
        IdentityId::Equiv12 => Outcome::counts(
            ExactCount::from(n + 1) * count::shapiro_lhs(n),
            count::mixed_lhs(n),
        ),
        IdentityId::ZRecursion => {
            let last = count::z_recursion(n).pop().expect("sequence is nonempty");
            Outcome::counts(count::catalan(2 * n), last)
        }
        IdentityId::SixteenRecursion => {
            let conv: ExactCount = (0..=n)
                .map(|i| count::mixed_lhs(i) * count::mixed_lhs(n - i))
                .sum();
            Outcome::counts(count::power(16, n), conv)
        }
        other => unreachable!("{other} has no numeric mode"),
    };
    Ok(outcome)
}

fn exhaustive_outcome(id: IdentityId, n: u64, caps: &Caps) -> Result<Outcome, Error> {
    match id {
        IdentityId::Thm1 => Ok(Outcome::counts(
            count::power(4, n) * count::catalan(n),
            even_zeroed_to_height_count(4 * n as usize + 1, 1).into(),
        )),
        IdentityId::Thm2 => Ok(Outcome::counts(
            count::power(4, n) * count::central_binom(n),
            even_zeroed_count(4 * n as usize).into(),
        )),
        IdentityId::Thm9 => exhaustive_thm9(n as usize, caps),
        IdentityId::Lemma3 => exhaustive_lemma3(n as usize, caps),
        IdentityId::Lemma4 => exhaustive_lemma4(n, caps),
        IdentityId::Lemma5 => Ok(Outcome::counts(
            count::central_binom(n),
            scan::count_matching(2 * n as usize, |p| {
                p.heights().skip(1).all(|h| h != 0)
            })
            .into(),
        )),
        IdentityId::Lemma6a => exhaustive_lemma6a(n),
        IdentityId::Lemma6b => exhaustive_lemma6b(n),
        IdentityId::Lemma7 => exhaustive_lemma7(n),
        IdentityId::WrongExtensions => exhaustive_wrong_extensions(n as usize),
        other => unreachable!("{other} has no exhaustive mode"),
    }
}

/// Number of even-zeroed paths of the given length.
fn even_zeroed_count(len: usize) -> u64 {
    scan::count_matching(len, Path::is_even_zeroed)
}

/// Number of even-zeroed paths of the given length ending at height `h`.
fn even_zeroed_to_height_count(len: usize, h: i64) -> u64 {
    scan::count_matching(len, move |p| {
        p.final_height() == h && p.is_even_zeroed()
    })
}

/// Even-zeroed balanced `2n`-paths are counted by `C_{2n}`, and
/// `chi_inv . psi` is a bijection from the Dyck paths of parameter `2n`
/// onto them: injectivity, surjectivity and both round trips are audited.
fn exhaustive_lemma3(n: usize, caps: &Caps) -> Result<Outcome, Error> {
    let codomain: BTreeSet<BalancedPath> =
        enumerate_even_zeroed_with_cap(n, caps.max_balanced_param)?.collect();
    let domain: Vec<DyckPath> =
        enumerate_dyck_with_cap(2 * n, caps.max_dyck_param)?.collect();

    let map_one = |d: &DyckPath| {
        let image = even_zeroed_from_dyck(d).expect("parameter 2n is even");
        let back = dyck_from_even_zeroed(&image).expect("image is even-zeroed");
        (d.clone(), image, back)
    };
    #[cfg(feature = "parallel")]
    let mapped: Vec<(DyckPath, BalancedPath, DyckPath)> =
        domain.par_iter().map(map_one).collect();
    #[cfg(not(feature = "parallel"))]
    let mapped: Vec<(DyckPath, BalancedPath, DyckPath)> = domain.iter().map(map_one).collect();

    let mut failures = Vec::new();
    let mut image_sources: BTreeMap<&BalancedPath, &DyckPath> = BTreeMap::new();
    for (source, image, back) in &mapped {
        if let Some(previous) = image_sources.insert(image, source) {
            push_failure(
                &mut failures,
                format!("injectivity: '{previous}' and '{source}' share image '{image}'"),
            );
        }
        if back != source {
            push_failure(
                &mut failures,
                format!("round trip: '{source}' -> '{image}' -> '{back}'"),
            );
        }
    }
    for image in image_sources.keys() {
        if !codomain.contains(*image) {
            push_failure(
                &mut failures,
                format!("image '{image}' is outside the even-zeroed family"),
            );
        }
    }
    for target in &codomain {
        if !image_sources.contains_key(target) {
            push_failure(
                &mut failures,
                format!("surjectivity: '{target}' has no preimage"),
            );
        }
    }

    Ok(Outcome {
        expected: count::catalan(2 * n as u64),
        actual: ExactCount::from(codomain.len()),
        failures,
    })
}

/// Balanced `(2n+1)`-paths grouped by the leftmost excursion of odd
/// excursion-parameter: with prefix length `4i` and excursion parameter
/// `2j+1`, each sign of that excursion must contribute exactly
/// `C_{2i} * C_{2j} * B_{2k}` paths (`k = n-i-j`, the factor 2 of the
/// identity), and the groups must add up to `B_{2n+1}`.
fn exhaustive_lemma4(n: u64, caps: &Caps) -> Result<Outcome, Error> {
    let mut cells: BTreeMap<(u64, u64, Sign), u64> = BTreeMap::new();
    let mut total = 0u64;
    let mut failures = Vec::new();
    for b in enumerate_balanced_with_cap(2 * n as usize + 1, caps.max_balanced_param)? {
        let mut start = 0usize;
        let mut cell = None;
        for item in &chi(&b).items {
            if item.parameter() % 2 == 0 {
                // excursion parameter = item parameter + 1, odd here
                cell = Some((start as u64 / 4, item.parameter() as u64 / 2, item.sign));
                break;
            }
            start += 2 * (item.parameter() + 1);
        }
        match cell {
            Some(key) => {
                debug_assert_eq!(start % 4, 0);
                *cells.entry(key).or_insert(0) += 1;
                total += 1;
            }
            None => push_failure(
                &mut failures,
                format!("'{b}' has no odd-parameter excursion"),
            ),
        }
    }
    for i in 0..=n {
        for j in 0..=n - i {
            let k = n - i - j;
            let expected =
                count::catalan(2 * i) * count::catalan(2 * j) * count::central_binom(2 * k);
            for sign in [Sign::Plus, Sign::Minus] {
                let got = ExactCount::from(cells.get(&(i, j, sign)).copied().unwrap_or(0));
                if got != expected {
                    push_failure(
                        &mut failures,
                        format!(
                            "group (i={i}, j={j}, {}): expected {expected}, counted {got}",
                            sign.to_char()
                        ),
                    );
                }
            }
        }
    }
    Ok(Outcome {
        expected: count::binom(4 * n + 2, 2 * n as i64 + 1),
        actual: ExactCount::from(total),
        failures,
    })
}

/// Rightmost-intercept grouping of the even-zeroed length-`4n` paths:
/// group `4i` must have size `C_{2i} * B_{2(n-i)}`.
fn exhaustive_lemma6a(n: u64) -> Result<Outcome, Error> {
    let tally = scan::tally_matching(4 * n as usize, |p| {
        p.is_even_zeroed()
            .then(|| *p.x_intercepts().last().expect("position 0 is an intercept"))
    });
    let mut failures = Vec::new();
    let total: u64 = tally.values().sum();
    for i in 0..=n {
        let expected = count::catalan(2 * i) * count::central_binom(2 * (n - i));
        let got = ExactCount::from(tally.get(&(4 * i as usize)).copied().unwrap_or(0));
        if got != expected {
            push_failure(
                &mut failures,
                format!("rightmost intercept {}: expected {expected}, counted {got}", 4 * i),
            );
        }
    }
    for key in tally.keys() {
        if key % 4 != 0 {
            push_failure(
                &mut failures,
                format!("even-zeroed path with rightmost intercept {key}"),
            );
        }
    }
    Ok(Outcome {
        expected: count::mixed_lhs(n),
        actual: ExactCount::from(total),
        failures,
    })
}

/// Rightmost-intercept grouping of the even-zeroed paths to `(4n+1, 1)`:
/// group `4i` must have size `C_{2i} * C_{2(n-i)}`.
fn exhaustive_lemma6b(n: u64) -> Result<Outcome, Error> {
    let tally = scan::tally_matching(4 * n as usize + 1, |p| {
        (p.final_height() == 1 && p.is_even_zeroed())
            .then(|| *p.x_intercepts().last().expect("position 0 is an intercept"))
    });
    let mut failures = Vec::new();
    let total: u64 = tally.values().sum();
    for i in 0..=n {
        let expected = count::catalan(2 * i) * count::catalan(2 * (n - i));
        let got = ExactCount::from(tally.get(&(4 * i as usize)).copied().unwrap_or(0));
        if got != expected {
            push_failure(
                &mut failures,
                format!("rightmost intercept {}: expected {expected}, counted {got}", 4 * i),
            );
        }
    }
    Ok(Outcome {
        expected: count::shapiro_lhs(n),
        actual: ExactCount::from(total),
        failures,
    })
}

/// Counts the even-zeroed paths of length `4n` and, for `n >= 1`,
/// re-derives the induction step `S_n = 16 S_{n-1} - 8 L_{n-1}` from
/// enumerated counts alone.
fn exhaustive_lemma7(n: u64) -> Result<Outcome, Error> {
    let s_n = even_zeroed_count(4 * n as usize);
    let mut failures = Vec::new();
    if n >= 1 {
        let s_prev = even_zeroed_count(4 * (n - 1) as usize);
        let l_prev = even_zeroed_to_height_count(4 * (n - 1) as usize + 1, 1);
        if 16 * s_prev - 8 * l_prev != s_n {
            push_failure(
                &mut failures,
                format!(
                    "accounting: 16*{s_prev} - 8*{l_prev} = {} but enumeration gives {s_n}",
                    16 * s_prev - 8 * l_prev
                ),
            );
        }
    }
    Ok(Outcome {
        expected: count::power(4, n) * count::central_binom(n),
        actual: ExactCount::from(s_n),
        failures,
    })
}

/// The 4-step extensions of an even-zeroed length-`4n` path that break the
/// even-zeroed property are exactly the even-zeroed paths to `(4n+1, 1)`
/// followed by a down-step and two free steps, plus their reflections:
/// `8 L_n` paths. Verified as a set equality.
fn exhaustive_wrong_extensions(n: usize) -> Result<Outcome, Error> {
    let to_one: Vec<Path> = scan::collect_matching(4 * n + 1, |p| {
        p.final_height() == 1 && p.is_even_zeroed()
    });
    let mut constructed: BTreeSet<Path> = BTreeSet::new();
    for q in &to_one {
        for s1 in [Step::Up, Step::Down] {
            for s2 in [Step::Up, Step::Down] {
                let mut steps = q.steps().to_vec();
                steps.extend([Step::Down, s1, s2]);
                let path = Path::from(steps);
                constructed.insert(path.reflect());
                constructed.insert(path);
            }
        }
    }

    let discarded: BTreeSet<Path> = scan::collect_matching(4 * n + 4, |p| {
        let prefix_clean = p.x_intercepts().iter().all(|&t| t > 4 * n || t % 4 == 0);
        prefix_clean && !p.is_even_zeroed()
    })
    .into_iter()
    .collect();

    let mut failures = Vec::new();
    for extra in discarded.difference(&constructed) {
        push_failure(&mut failures, format!("unaccounted wrong extension '{extra}'"));
    }
    for extra in constructed.difference(&discarded) {
        push_failure(&mut failures, format!("constructed path '{extra}' is not a wrong extension"));
    }
    Ok(Outcome {
        expected: ExactCount::from(8 * to_one.len()),
        actual: ExactCount::from(discarded.len()),
        failures,
    })
}

/// Builds the full even-parameter and odd-parameter pair families of one
/// parameter sum and audits the splice maps between them: injectivity,
/// surjectivity and both round trips.
fn exhaustive_thm9(n: usize, caps: &Caps) -> Result<Outcome, Error> {
    let cap = caps.max_balanced_param;
    let mut pairs_e: Vec<PairE> = Vec::new();
    for first_param in (0..=2 * n).step_by(2) {
        let firsts: Vec<BalancedPath> = enumerate_balanced_with_cap(first_param, cap)?
            .filter(|b| b.as_path().x_intercepts().iter().any(|t| t % 4 == 2))
            .collect();
        if firsts.is_empty() {
            continue;
        }
        for second in enumerate_balanced_with_cap(2 * n - first_param, cap)? {
            for first in &firsts {
                pairs_e.push(
                    PairE::new(first.clone(), second.clone()).expect("enumerated within domain"),
                );
            }
        }
    }
    let mut pairs_o: Vec<PairO> = Vec::new();
    for first_param in (1..=2 * n).step_by(2) {
        let firsts: Vec<BalancedPath> =
            enumerate_balanced_with_cap(first_param, cap)?.collect();
        for second in enumerate_balanced_with_cap(2 * n - first_param, cap)? {
            for first in &firsts {
                pairs_o.push(
                    PairO::new(first.clone(), second.clone()).expect("enumerated within domain"),
                );
            }
        }
    }

    let mut failures = Vec::new();
    let odd_set: BTreeSet<&PairO> = pairs_o.iter().collect();
    let mut images: BTreeSet<PairO> = BTreeSet::new();
    for pair in &pairs_e {
        let image = theorem9_forward(pair);
        if image.parameter_sum() != pair.parameter_sum() {
            push_failure(
                &mut failures,
                format!("parameter sum changed for ('{}', '{}')", pair.first(), pair.second()),
            );
        }
        if !odd_set.contains(&image) {
            push_failure(
                &mut failures,
                format!("image ('{}', '{}') is outside the odd family", image.first(), image.second()),
            );
        }
        if theorem9_backward(&image) != *pair {
            push_failure(
                &mut failures,
                format!("backward(forward) moved ('{}', '{}')", pair.first(), pair.second()),
            );
        }
        if !images.insert(image) {
            push_failure(&mut failures, "duplicate image in forward map".to_string());
        }
    }
    for pair in &pairs_o {
        if !images.contains(pair) {
            push_failure(
                &mut failures,
                format!("surjectivity: ('{}', '{}') has no preimage", pair.first(), pair.second()),
            );
            continue;
        }
        let back = theorem9_backward(pair);
        if theorem9_forward(&back) != *pair {
            push_failure(
                &mut failures,
                format!("forward(backward) moved ('{}', '{}')", pair.first(), pair.second()),
            );
        }
    }

    Ok(Outcome {
        expected: ExactCount::from(pairs_o.len()),
        actual: ExactCount::from(pairs_e.len()),
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u128) -> ExactCount {
        ExactCount::from(n)
    }

    #[test]
    fn thm2_numeric_example() {
        let report = verify(IdentityId::Thm2, 1, Mode::Numeric).unwrap();
        assert_eq!(report.expected, big(8));
        assert_eq!(report.actual, big(8));
        assert!(report.passed);
        assert!(report.witness.is_none());
        assert_eq!(report.mode, Mode::Numeric);
    }

    #[test]
    fn thm1_at_zero() {
        let report = verify(IdentityId::Thm1, 0, Mode::Numeric).unwrap();
        assert_eq!(report.expected, big(1));
        assert_eq!(report.actual, big(1));
        assert!(report.passed);
    }

    #[test]
    fn lemma3_exhaustive_example() {
        let report = verify(IdentityId::Lemma3, 1, Mode::Exhaustive).unwrap();
        assert_eq!(report.expected, big(2));
        assert_eq!(report.actual, big(2));
        assert!(report.passed);
        assert!(report.witness.is_none());
    }

    #[test]
    fn lemma7_exhaustive_example() {
        let report = verify(IdentityId::Lemma7, 1, Mode::Exhaustive).unwrap();
        assert_eq!(report.expected, big(8));
        assert_eq!(report.actual, big(8));
        assert!(report.passed);
    }

    #[test]
    fn both_mode_runs_what_exists() {
        let report = verify(IdentityId::Thm2, 2, Mode::Both).unwrap();
        assert_eq!(report.mode, Mode::Both);
        assert!(report.passed);
        let report = verify(IdentityId::Lemma5, 3, Mode::Both).unwrap();
        assert_eq!(report.mode, Mode::Exhaustive);
        let report = verify(IdentityId::Thm8, 3, Mode::Both).unwrap();
        assert_eq!(report.mode, Mode::Numeric);
    }

    #[test]
    fn unsupported_modes_are_rejected() {
        assert!(matches!(
            verify(IdentityId::Lemma5, 1, Mode::Numeric),
            Err(Error::UnsupportedMode { .. })
        ));
        assert!(matches!(
            verify(IdentityId::Thm8, 1, Mode::Exhaustive),
            Err(Error::UnsupportedMode { .. })
        ));
    }

    #[test]
    fn cor10_rejects_zero_and_passes_after() {
        assert!(matches!(
            verify(IdentityId::Cor10, 0, Mode::Numeric),
            Err(Error::IndexOutOfRange { .. })
        ));
        let report = verify(IdentityId::Cor10, 2, Mode::Numeric).unwrap();
        assert_eq!(report.expected, big(80));
        assert!(report.passed);
    }

    #[test]
    fn caps_stop_exhaustive_checks() {
        assert!(matches!(
            verify(IdentityId::Thm2, 6, Mode::Exhaustive),
            Err(Error::CapExceeded { .. })
        ));
        assert!(verify(IdentityId::Thm2, 6, Mode::Numeric).is_ok());
        let caps = Caps::from_budget(24);
        assert!(verify_with_caps(IdentityId::Thm2, 6, Mode::Exhaustive, &caps).is_ok());
    }

    #[test]
    fn numeric_cap_applies() {
        assert!(matches!(
            verify(IdentityId::Thm2, 21, Mode::Numeric),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn verify_range_thm2() {
        let reports = verify_range(IdentityId::Thm2, 0, 12, Mode::Numeric).unwrap();
        assert_eq!(reports.len(), 13);
        assert!(reports.iter().all(|r| r.passed));
        assert!(reports.windows(2).all(|w| w[0].n + 1 == w[1].n));
    }

    #[test]
    fn verify_range_thm9_exhaustive() {
        let reports = verify_range(IdentityId::Thm9, 0, 2, Mode::Exhaustive).unwrap();
        assert_eq!(reports.len(), 3);
        assert!(reports.iter().all(|r| r.passed));
        assert_eq!(reports[0].actual, big(0));
        assert_eq!(reports[1].actual, big(4));
        assert_eq!(reports[2].actual, big(80));
    }

    #[test]
    fn verify_range_lemma5() {
        let reports = verify_range(IdentityId::Lemma5, 0, 6, Mode::Exhaustive).unwrap();
        assert_eq!(reports.len(), 7);
        assert!(reports.iter().all(|r| r.passed));
        assert_eq!(reports[6].actual, big(924));
    }

    #[test]
    fn verify_range_rejects_inverted_range() {
        assert!(matches!(
            verify_range(IdentityId::Thm1, 3, 2, Mode::Numeric),
            Err(Error::InvalidRange { from: 3, to: 2 })
        ));
    }

    #[test]
    fn report_json_shape() {
        let report = verify(IdentityId::Thm1, 2, Mode::Both).unwrap();
        let value = report.to_json();
        let object = value.as_object().unwrap();
        assert_eq!(object.get("identity").unwrap(), "thm1");
        assert_eq!(object.get("n").unwrap(), 2);
        assert_eq!(object.get("mode").unwrap(), "both");
        assert_eq!(object.get("expected").unwrap(), "32");
        assert_eq!(object.get("actual").unwrap(), "32");
        assert_eq!(object.get("passed").unwrap(), true);
        assert!(object.get("witness").is_none());
        assert!(object.get("elapsed_ms").unwrap().is_u64());
    }

    #[test]
    fn failed_report_serializes_witness() {
        let report = VerificationReport {
            identity: IdentityId::Thm1,
            n: 1,
            mode: Mode::Numeric,
            expected: big(4),
            actual: big(5),
            passed: false,
            witness: Some(vec!["numeric: expected 4, actual 5".to_string()]),
            elapsed: Duration::from_millis(3),
        };
        let value = report.to_json();
        assert_eq!(value["passed"], false);
        assert_eq!(value["witness"][0], "numeric: expected 4, actual 5");
        assert_eq!(value["elapsed_ms"], 3);
    }

    #[test]
    fn identity_names_round_trip() {
        for id in IdentityId::ALL {
            assert_eq!(id.name().parse::<IdentityId>().unwrap(), id);
        }
        assert!("thm3".parse::<IdentityId>().is_err());
        assert_eq!("equiv-1-2".parse::<IdentityId>().unwrap(), IdentityId::Equiv12);
    }

    #[test]
    fn witness_machinery_reports_failures() {
        // Drive the combiner with a broken outcome to check the
        // failed-report shape without breaking a real identity.
        let outcome = Outcome {
            expected: big(3),
            actual: big(4),
            failures: vec!["sample witness 'UUDD'".to_string()],
        };
        assert!(!outcome.passed());
        let lines = outcome.describe("exhaustive");
        assert_eq!(lines.len(), 2);
        assert!(lines[0].contains("expected 3"));
        assert!(lines[1].contains("UUDD"));
    }

    #[test]
    fn witnesses_are_capped() {
        let mut failures = Vec::new();
        for i in 0..20 {
            push_failure(&mut failures, format!("line {i}"));
        }
        assert_eq!(failures.len(), MAX_WITNESSES + 1);
        assert!(failures.last().unwrap().contains("suppressed"));
    }

    #[test]
    fn exhaustive_and_numeric_agree_where_both_run() {
        for id in [IdentityId::Thm1, IdentityId::Thm2, IdentityId::Lemma4, IdentityId::Thm9] {
            for n in 0..=2 {
                let report = verify(id, n, Mode::Both).unwrap();
                assert!(report.passed, "{id} at {n}");
                assert_eq!(report.mode, Mode::Both);
            }
        }
    }

    #[test]
    fn wrong_extensions_small() {
        let report = verify(IdentityId::WrongExtensions, 0, Mode::Exhaustive).unwrap();
        assert_eq!(report.expected, big(8));
        assert_eq!(report.actual, big(8));
        assert!(report.passed);
    }
}
