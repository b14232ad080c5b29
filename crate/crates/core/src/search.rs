//! Exhaustive range searches for the all-permutations property.
//!
//! The search space is multisets (nondecreasing tuples), not ordered tuples:
//! the property is permutation-invariant, so ordered enumeration would redo
//! each verdict 24 (or 362880) times. Work is partitioned into contiguous
//! unit ranges so shards can run concurrently and merge deterministically,
//! and 3×3 scans carry enough state to stop on a budget and resume later
//! with bit-identical final output.

use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::Fnv1a;
use crate::eigen::{self, EigenPair};
use crate::families::CoefficientQuad;
use crate::multiset::{multiset_count, NondecreasingTuples};
use crate::triples::PythTriple;
use crate::{Error, Result};

/// Inclusive coefficient bounds applied to every matrix entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SearchRange {
    lo: i64,
    hi: i64,
}

impl SearchRange {
    pub fn new(lo: i64, hi: i64) -> Result<SearchRange> {
        if lo > hi {
            return Err(Error::InvalidRange { lo, hi });
        }
        Ok(SearchRange { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    /// Number of distinct coefficient values.
    pub fn num_values(&self) -> u64 {
        (self.hi - self.lo) as u64 + 1
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    /// Number of coefficient multisets of the given arity in this range.
    pub fn multisets(&self, arity: u32) -> Result<u64> {
        multiset_count(self.num_values(), arity).ok_or(Error::Overflow {
            op: "multiset count",
        })
    }
}

/// Matrix dimension a search runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dim {
    Two,
    Three,
}

impl Dim {
    pub fn arity(self) -> u32 {
        match self {
            Dim::Two => 4,
            Dim::Three => 9,
        }
    }
}

/// How a passing quadruple relates to the known solution families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    /// All four entries equal.
    Constant,
    /// Some pairing of the multiset has equal sums `a + d = b + c = t`.
    Ansatz {
        t: i64,
        /// The pair playing `(a, d)`.
        diag: (i64, i64),
        /// The pair playing `(b, c)`.
        off: (i64, i64),
    },
    /// Two entries are zero and the product of the other two is
    /// `square_root²`.
    Degenerate { square_root: i64 },
    /// Passes every permutation but fits no known family pattern.
    Other,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Constant => "constant",
            Classification::Ansatz { .. } => "ansatz",
            Classification::Degenerate { .. } => "degenerate",
            Classification::Other => "other",
        }
    }
}

fn perfect_square_root_i128(n: i128) -> Option<i128> {
    if n < 0 {
        return None;
    }
    let r = (n as u128).isqrt();
    (r * r == n as u128).then_some(r as i128)
}

/// Classify a multiset of four coefficients. Precedence: constant, then
/// ansatz (tried over the three pairings in sorted order), then degenerate,
/// then other. A `Degenerate` result therefore certifies the quadruple is
/// *not* an ansatz solution.
pub fn classify_multiset(multiset: [i64; 4]) -> Classification {
    let mut m = multiset;
    m.sort_unstable();

    if m[0] == m[3] {
        return Classification::Constant;
    }

    let pairings = [(0usize, 1usize, 2usize, 3usize), (0, 2, 1, 3), (0, 3, 1, 2)];
    for (i, j, p, q) in pairings {
        let lhs = m[i] as i128 + m[j] as i128;
        let rhs = m[p] as i128 + m[q] as i128;
        if lhs == rhs {
            if let Ok(t) = i64::try_from(lhs) {
                return Classification::Ansatz {
                    t,
                    diag: (m[i], m[j]),
                    off: (m[p], m[q]),
                };
            }
        }
    }

    let zeros = m.iter().filter(|&&v| v == 0).count();
    if zeros >= 2 {
        let nonzero_pair: Vec<i64> = m.iter().copied().filter(|&v| v != 0).collect();
        let product: i128 = match nonzero_pair.as_slice() {
            [x, y] => (*x as i128) * (*y as i128),
            // Three or four zeros: the remaining product is 0 (all four
            // zeros was already classified constant).
            _ => 0,
        };
        if let Some(root) = perfect_square_root_i128(product) {
            return Classification::Degenerate {
                square_root: root as i64,
            };
        }
    }

    Classification::Other
}

/// Classify a constructed quadruple (by its multiset).
pub fn classify(quad: &CoefficientQuad) -> Classification {
    classify_multiset(quad.entries())
}

/// Recover the Pythagorean triple behind an ansatz classification:
/// `k = b - d`, `l = a - b`, `u² = t² + 4kl`, `v² = t² - 4kl`,
/// `(r, s) = ((u+v)/2, (u-v)/2)` up to sign. Returns `None` when `k·l = 0`
/// (no valid triple: a leg would vanish) or when the square roots do not
/// exist (the quadruple never passed verification).
pub fn recover_triple(classification: &Classification) -> Result<Option<PythTriple>> {
    let Classification::Ansatz { t, diag, off } = classification else {
        return Ok(None);
    };
    let (a, d) = *diag;
    let (b, _c) = *off;
    let k = b as i128 - d as i128;
    let l = a as i128 - b as i128;
    let kl = k * l;
    if kl == 0 {
        return Ok(None);
    }
    let t2 = (*t as i128) * (*t as i128);
    let (Some(u), Some(v)) = (
        perfect_square_root_i128(t2 + 4 * kl),
        perfect_square_root_i128(t2 - 4 * kl),
    ) else {
        return Ok(None);
    };
    let r = (u + v) / 2;
    let s = (u - v).abs() / 2;
    let to = |v: i128| {
        i64::try_from(v).map_err(|_| Error::Overflow {
            op: "triple recovery",
        })
    };
    Ok(Some(PythTriple::new(
        to(r)?,
        to(s)?,
        to((*t as i128).abs())?,
    )?))
}

/// A quadruple found by the 2×2 search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Record2 {
    /// Sorted ascending.
    pub coefficients: [i64; 4],
    pub classification: Classification,
    /// Eigenvalues of each swap class, in report order.
    pub eigen_classes: Vec<EigenPair>,
}

/// A nonuple found by the 3×3 search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Record3 {
    /// Sorted ascending.
    pub coefficients: [i64; 9],
    /// True for the all-entries-equal family.
    pub trivial: bool,
    /// Spectrum of the lexicographically first arrangement, descending.
    pub spectrum: (i64, i64, i64),
}

/// Scan one contiguous run of 2×2 multiset indices.
pub fn scan_units_2x2(range: SearchRange, start: u64, end: u64) -> Result<Vec<Record2>> {
    range.multisets(Dim::Two.arity())?;
    let mut out = Vec::new();
    let tuples = NondecreasingTuples::<4>::starting_at(range.lo, range.hi, start)
        .take((end - start) as usize);
    for coefficients in tuples {
        let quad = CoefficientQuad::from_entries(coefficients);
        let report = eigen::verify_all_permutations(&quad)?;
        if report.all_pass {
            let eigen_classes = report
                .classes
                .iter()
                .filter_map(|c| c.eigenvalues)
                .collect();
            out.push(Record2 {
                coefficients,
                classification: classify_multiset(coefficients),
                eigen_classes,
            });
        }
    }
    Ok(out)
}

/// Every multiset in the range whose arrangements all have integer
/// eigenvalues, in lexicographic multiset order. Work is one unit per
/// multiset; if the range needs more units than `budget` the search refuses
/// up front and reports the required budget.
pub fn search_2x2(range: SearchRange, budget: u64) -> Result<Vec<Record2>> {
    let required = range.multisets(Dim::Two.arity())?;
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    scan_units_2x2(range, 0, required)
}

/// Scan one contiguous run of 3×3 block indices.
pub fn scan_units_3x3(
    range: SearchRange,
    block_size: u64,
    start_unit: u64,
    end_unit: u64,
) -> Result<Vec<Record3>> {
    let total = range.multisets(Dim::Three.arity())?;
    let first = start_unit.saturating_mul(block_size).min(total);
    let last = end_unit.saturating_mul(block_size).min(total);
    let mut out = Vec::new();
    let tuples = NondecreasingTuples::<9>::starting_at(range.lo, range.hi, first)
        .take((last - first) as usize);
    for coefficients in tuples {
        let report = eigen::verify_all_permutations_3x3(&coefficients)?;
        if report.all_pass {
            out.push(Record3 {
                coefficients,
                trivial: coefficients.iter().all(|&v| v == coefficients[0]),
                spectrum: report
                    .sample_spectrum
                    .expect("all-pass report has a spectrum"),
            });
        }
    }
    Ok(out)
}

/// One shard's contiguous slice of the work-unit index space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShardDescriptor {
    pub index: u32,
    pub start_unit: u64,
    pub end_unit: u64,
}

impl ShardDescriptor {
    pub fn units(&self) -> u64 {
        self.end_unit - self.start_unit
    }
}

/// Disjoint, covering partition of a search into shards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShardPlan {
    pub dim: Dim,
    pub range: SearchRange,
    /// Multisets per work unit (1 for 2×2 searches).
    pub block_size: u64,
    pub total_units: u64,
    pub shards: Vec<ShardDescriptor>,
}

/// Split the unit index space into `shards` near-equal contiguous chunks.
/// Shards may be empty when there are more shards than units; the union is
/// always exactly the whole space, so merged shard outputs equal a
/// single-shard run.
pub fn partition_work(
    range: SearchRange,
    dim: Dim,
    block_size: u64,
    shards: u32,
) -> Result<ShardPlan> {
    if block_size == 0 {
        return Err(Error::BadParameter {
            name: "block_size",
            value: 0,
            requirement: "positive",
        });
    }
    if shards == 0 {
        return Err(Error::BadParameter {
            name: "shards",
            value: 0,
            requirement: "positive",
        });
    }
    let multisets = range.multisets(dim.arity())?;
    let total_units = multisets.div_ceil(block_size);
    let per_shard = total_units / shards as u64;
    let remainder = total_units % shards as u64;
    let mut descriptors = Vec::with_capacity(shards as usize);
    let mut cursor = 0u64;
    for index in 0..shards {
        let size = per_shard + if (index as u64) < remainder { 1 } else { 0 };
        descriptors.push(ShardDescriptor {
            index,
            start_unit: cursor,
            end_unit: cursor + size,
        });
        cursor += size;
    }
    debug_assert_eq!(cursor, total_units);
    Ok(ShardPlan {
        dim,
        range,
        block_size,
        total_units,
        shards: descriptors,
    })
}

/// Resumable state of a 3×3 search: the plan parameters, each shard's next
/// unprocessed unit, and the records accumulated so far (kept sorted).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub range: SearchRange,
    pub shards: u32,
    pub block_size: u64,
    pub total_units: u64,
    /// Next unit each shard will process; equal to the shard's end when the
    /// shard is done.
    pub shard_next: Vec<u64>,
    pub records: Vec<Record3>,
}

impl Checkpoint {
    /// Fresh state for a plan: every shard at its start, no records.
    pub fn fresh(plan: &ShardPlan, shards: u32) -> Checkpoint {
        Checkpoint {
            range: plan.range,
            shards,
            block_size: plan.block_size,
            total_units: plan.total_units,
            shard_next: plan.shards.iter().map(|s| s.start_unit).collect(),
            records: Vec::new(),
        }
    }

    /// Identifier tying checkpoint files to the search they belong to.
    pub fn search_id(&self) -> String {
        use core::fmt::Write;
        let mut id = String::new();
        let _ = write!(
            id,
            "3x3 lo={} hi={} shards={} block={}",
            self.range.lo(),
            self.range.hi(),
            self.shards,
            self.block_size
        );
        id
    }

    pub fn is_complete(&self, plan: &ShardPlan) -> bool {
        self.shard_next
            .iter()
            .zip(plan.shards.iter())
            .all(|(next, shard)| *next >= shard.end_unit)
    }

    /// Content digest over the identity, frontiers, and records.
    pub fn digest(&self) -> u64 {
        let mut h = Fnv1a::new();
        h.write(self.search_id().as_bytes());
        h.write_u64(self.total_units);
        for next in &self.shard_next {
            h.write_u64(*next);
        }
        h.write_u64(self.records.len() as u64);
        for record in &self.records {
            for c in record.coefficients {
                h.write_i64(c);
            }
            h.write(&[record.trivial as u8]);
            h.write_i64(record.spectrum.0);
            h.write_i64(record.spectrum.1);
            h.write_i64(record.spectrum.2);
        }
        h.finish()
    }

    fn validate_against(&self, plan: &ShardPlan, shards: u32) -> Result<()> {
        if self.range != plan.range {
            return Err(Error::CheckpointMismatch {
                reason: "range differs from the requested search",
            });
        }
        if self.shards != shards || self.shard_next.len() != plan.shards.len() {
            return Err(Error::CheckpointMismatch {
                reason: "shard count differs from the requested search",
            });
        }
        if self.block_size != plan.block_size || self.total_units != plan.total_units {
            return Err(Error::CheckpointMismatch {
                reason: "work-unit layout differs from the requested search",
            });
        }
        for (next, shard) in self.shard_next.iter().zip(plan.shards.iter()) {
            if *next < shard.start_unit || *next > shard.end_unit {
                return Err(Error::CheckpointMismatch {
                    reason: "shard frontier outside its unit range",
                });
            }
        }
        Ok(())
    }
}

/// Pending work per shard for one driver pass: `(shard index, from, to)`.
/// Units are handed to shards in index order until the budget runs out, so
/// the allocation is deterministic regardless of how the slices are then
/// executed.
pub fn allocate_units(
    plan: &ShardPlan,
    shard_next: &[u64],
    budget: Option<u64>,
) -> Vec<(u32, u64, u64)> {
    let mut left = budget.unwrap_or(u64::MAX);
    let mut out = Vec::new();
    for shard in &plan.shards {
        if left == 0 {
            break;
        }
        let next = shard_next[shard.index as usize];
        let pending = shard.end_unit.saturating_sub(next);
        let take = pending.min(left);
        if take > 0 {
            out.push((shard.index, next, next + take));
            left -= take;
        }
    }
    out
}

/// Result of a (possibly budget-limited) 3×3 search pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Search3Outcome {
    /// All records found so far, sorted by coefficients.
    pub records: Vec<Record3>,
    /// True when every shard has processed its whole unit range.
    pub complete: bool,
    /// State to persist for resuming when incomplete.
    pub checkpoint: Checkpoint,
}

/// Scan all multisets of nine values in the range, optionally limited to
/// `budget` work units (blocks of `block_size` multisets) and optionally
/// resuming from a previous checkpoint. Shard outputs merge into a sorted
/// record list that is independent of the shard count and of any
/// interrupt/resume split.
pub fn search_3x3(
    range: SearchRange,
    shards: u32,
    block_size: u64,
    budget: Option<u64>,
    resume: Option<Checkpoint>,
) -> Result<Search3Outcome> {
    let plan = partition_work(range, Dim::Three, block_size, shards)?;
    let mut state = match resume {
        Some(cp) => {
            cp.validate_against(&plan, shards)?;
            cp
        }
        None => Checkpoint::fresh(&plan, shards),
    };

    for (shard, from, to) in allocate_units(&plan, &state.shard_next, budget) {
        let mut found = scan_units_3x3(range, block_size, from, to)?;
        state.records.append(&mut found);
        state.shard_next[shard as usize] = to;
    }
    state.records.sort_unstable_by_key(|r| r.coefficients);

    let complete = state.is_complete(&plan);
    Ok(Search3Outcome {
        records: state.records.clone(),
        complete,
        checkpoint: state,
    })
}
