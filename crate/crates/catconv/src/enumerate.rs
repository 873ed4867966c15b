//! Deterministic path enumerators.
//!
//! All enumerators yield paths of one fixed length in strictly increasing
//! lexicographic order (`U < D`). Balanced, Dyck and even-zeroed families
//! are generated directly by constrained backtracking over admissible
//! prefixes — never by filtering the full step space — so enumerating the
//! `C_n` Dyck paths costs `O(C_n * n)`, not `O(4^n)`.
//!
//! Streams are single-consumer. Parallel workloads should partition index
//! ranges (see [`crate::scan`]) instead of sharing one stream.

use crate::error::Error;
use crate::path::{BalancedPath, DyckPath, Path, Step};

/// Default cap on the length of full `2^len` enumeration.
pub const DEFAULT_MAX_PATH_LEN: usize = 24;
/// Default cap on the parameter of balanced / Dyck / even-zeroed enumeration.
pub const DEFAULT_MAX_PARAMETER: usize = 12;

/// Prefix-admissibility oracle for one path family.
///
/// Contract: `admits` must only accept steps that leave the prefix
/// completable to a full member of the family. Every family below
/// satisfies this (greedy up-then-down always completes an admissible
/// prefix), which is what lets the iterator extend greedily without
/// backtracking out of dead ends.
trait Admit {
    fn total_len(&self) -> usize;
    fn admits(&self, pos: usize, height: i64, step: Step) -> bool;
}

/// All `2^len` paths.
struct Free {
    len: usize,
}

impl Admit for Free {
    fn total_len(&self) -> usize {
        self.len
    }

    fn admits(&self, _pos: usize, _height: i64, _step: Step) -> bool {
        true
    }
}

/// Balanced paths with `param` up-steps and `param` down-steps.
struct Balanced {
    param: usize,
}

impl Admit for Balanced {
    fn total_len(&self) -> usize {
        2 * self.param
    }

    fn admits(&self, pos: usize, height: i64, step: Step) -> bool {
        let ups = (pos as i64 + height) / 2;
        let downs = pos as i64 - ups;
        match step {
            Step::Up => ups < self.param as i64,
            Step::Down => downs < self.param as i64,
        }
    }
}

/// Dyck paths of the given parameter.
struct Dyck {
    balanced: Balanced,
}

impl Admit for Dyck {
    fn total_len(&self) -> usize {
        self.balanced.total_len()
    }

    fn admits(&self, pos: usize, height: i64, step: Step) -> bool {
        self.balanced.admits(pos, height, step) && (step == Step::Up || height >= 1)
    }
}

/// Even-zeroed balanced paths. The parameter must be even (an odd-parameter
/// balanced path ends at a position congruent to 2 mod 4, which is itself a
/// forbidden intercept, so the family would be empty).
struct EvenZeroed {
    balanced: Balanced,
}

impl Admit for EvenZeroed {
    fn total_len(&self) -> usize {
        self.balanced.total_len()
    }

    fn admits(&self, pos: usize, height: i64, step: Step) -> bool {
        if !self.balanced.admits(pos, height, step) {
            return false;
        }
        // Forbid landing on the axis at a position not divisible by 4.
        height + step.delta() != 0 || (pos + 1).is_multiple_of(4)
    }
}

/// Backtracking lexicographic enumerator over admissible prefixes.
struct Lex<A: Admit> {
    admit: A,
    steps: Vec<Step>,
    height: i64,
    primed: bool,
    done: bool,
}

impl<A: Admit> Lex<A> {
    fn new(admit: A) -> Self {
        let cap = admit.total_len();
        Lex {
            admit,
            steps: Vec::with_capacity(cap),
            height: 0,
            primed: false,
            done: false,
        }
    }

    fn push(&mut self, step: Step) {
        self.height += step.delta();
        self.steps.push(step);
    }

    fn pop(&mut self) -> Option<Step> {
        let step = self.steps.pop()?;
        self.height -= step.delta();
        Some(step)
    }

    /// Extends the current prefix to full length with the smallest
    /// admissible step at each position. Cannot get stuck thanks to the
    /// `Admit` contract.
    fn extend_min(&mut self) {
        while self.steps.len() < self.admit.total_len() {
            let pos = self.steps.len();
            if self.admit.admits(pos, self.height, Step::Up) {
                self.push(Step::Up);
            } else if self.admit.admits(pos, self.height, Step::Down) {
                self.push(Step::Down);
            } else {
                unreachable!("admissible prefix has no admissible continuation");
            }
        }
    }

    fn current(&self) -> Path {
        Path::from(self.steps.clone())
    }
}

impl<A: Admit> Iterator for Lex<A> {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        if self.done {
            return None;
        }
        if !self.primed {
            self.primed = true;
            self.extend_min();
            return Some(self.current());
        }
        // Find the rightmost up-step that can be raised to a down-step,
        // then refill the suffix minimally.
        loop {
            let Some(last) = self.pop() else {
                self.done = true;
                return None;
            };
            if last == Step::Up {
                let pos = self.steps.len();
                if self.admit.admits(pos, self.height, Step::Down) {
                    self.push(Step::Down);
                    self.extend_min();
                    return Some(self.current());
                }
            }
        }
    }
}

/// Stream of all `2^len` paths of length `len`, lexicographic.
pub struct PathEnumerator(Lex<Free>);

impl Iterator for PathEnumerator {
    type Item = Path;

    fn next(&mut self) -> Option<Path> {
        self.0.next()
    }
}

/// Stream of the `binom(2n, n)` balanced `n`-paths, lexicographic.
pub struct BalancedEnumerator(Lex<Balanced>);

impl Iterator for BalancedEnumerator {
    type Item = BalancedPath;

    fn next(&mut self) -> Option<BalancedPath> {
        self.0.next().map(BalancedPath::new_unchecked)
    }
}

/// Stream of the `C_n` Dyck paths of parameter `n`, lexicographic.
pub struct DyckEnumerator(Lex<Dyck>);

impl Iterator for DyckEnumerator {
    type Item = DyckPath;

    fn next(&mut self) -> Option<DyckPath> {
        self.0.next().map(DyckPath::new_unchecked)
    }
}

/// Stream of the even-zeroed balanced `2n`-paths, lexicographic.
pub struct EvenZeroedEnumerator(Lex<EvenZeroed>);

impl Iterator for EvenZeroedEnumerator {
    type Item = BalancedPath;

    fn next(&mut self) -> Option<BalancedPath> {
        self.0.next().map(BalancedPath::new_unchecked)
    }
}

fn check_cap(requested: usize, cap: usize) -> Result<(), Error> {
    if requested > cap {
        Err(Error::CapExceeded { requested, cap })
    } else {
        Ok(())
    }
}

/// All paths of the given length, capped at [`DEFAULT_MAX_PATH_LEN`].
pub fn enumerate_paths(len: usize) -> Result<PathEnumerator, Error> {
    enumerate_paths_with_cap(len, DEFAULT_MAX_PATH_LEN)
}

pub fn enumerate_paths_with_cap(len: usize, cap: usize) -> Result<PathEnumerator, Error> {
    check_cap(len, cap)?;
    Ok(PathEnumerator(Lex::new(Free { len })))
}

/// All balanced `n`-paths, capped at [`DEFAULT_MAX_PARAMETER`].
pub fn enumerate_balanced(n: usize) -> Result<BalancedEnumerator, Error> {
    enumerate_balanced_with_cap(n, DEFAULT_MAX_PARAMETER)
}

pub fn enumerate_balanced_with_cap(n: usize, cap: usize) -> Result<BalancedEnumerator, Error> {
    check_cap(n, cap)?;
    Ok(BalancedEnumerator(Lex::new(Balanced { param: n })))
}

/// All Dyck paths of parameter `n`, capped at [`DEFAULT_MAX_PARAMETER`].
pub fn enumerate_dyck(n: usize) -> Result<DyckEnumerator, Error> {
    enumerate_dyck_with_cap(n, DEFAULT_MAX_PARAMETER)
}

pub fn enumerate_dyck_with_cap(n: usize, cap: usize) -> Result<DyckEnumerator, Error> {
    check_cap(n, cap)?;
    Ok(DyckEnumerator(Lex::new(Dyck {
        balanced: Balanced { param: n },
    })))
}

/// All even-zeroed balanced `2n`-paths (the index matches the Catalan count
/// `C_{2n}` of the family). The cap applies to the parameter `2n`.
pub fn enumerate_even_zeroed(n: usize) -> Result<EvenZeroedEnumerator, Error> {
    enumerate_even_zeroed_with_cap(n, DEFAULT_MAX_PARAMETER)
}

pub fn enumerate_even_zeroed_with_cap(
    n: usize,
    cap: usize,
) -> Result<EvenZeroedEnumerator, Error> {
    check_cap(2 * n, cap)?;
    Ok(EvenZeroedEnumerator(Lex::new(EvenZeroed {
        balanced: Balanced { param: 2 * n },
    })))
}
