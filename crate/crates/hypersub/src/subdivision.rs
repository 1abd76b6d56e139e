//! The hypersimplicial subdivision `H(r, d, i)` of the dilated hypersimplex
//! `r * D(d, i)`, together with everything needed to verify it is a
//! subdivision: a deterministic covering witness, exact containment and
//! pairwise-face checks, volume additivity, and an independent normalized
//! volume oracle via Ehrhart lattice-point counting.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{composition_count, compositions_bounded, EulerianTable};
use crate::error::{Error, Result};
use crate::geometry::{Cell, CellDto, LatticeVector, Rational, RationalPoint};

/// The cell family `H(r, d, i)`: for each level `j` in `[1, d]`, one cell
/// `v + D(d, j)` per weak composition `v` of `i*r - j` into `d + 1` parts
/// bounded by `r - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    r: usize,
    d: usize,
    i: usize,
    cells: Vec<Cell>,
}

impl Subdivision {
    /// Construct the canonical cell list, ordered by level and then
    /// lexicographically by translation vector.
    pub fn build(r: usize, d: usize, i: usize) -> Result<Self> {
        check_params(r, d, i)?;
        let ir = checked_ir(r, i)?;
        let mut cells = Vec::new();
        for j in 1..=d {
            for comp in compositions_bounded(r - 1, d + 1, ir - j as i64)? {
                let coords = comp.parts().iter().map(|&p| BigInt::from(p)).collect();
                cells.push(Cell::new(LatticeVector::new(coords), j)?);
            }
        }
        Ok(Subdivision { r, d, i, cells })
    }

    /// Wrap an explicit cell list. Shape only: parameters must be in range,
    /// dimensions consistent, and cells distinct. Whether the cells actually
    /// form `H(r, d, i)` is what [`Subdivision::verify`] and
    /// [`Subdivision::validate_canonical`] decide.
    pub fn from_cells(r: usize, d: usize, i: usize, cells: Vec<Cell>) -> Result<Self> {
        check_params(r, d, i)?;
        for cell in &cells {
            if cell.ambient_dim() != d {
                return Err(Error::DimensionMismatch {
                    left: d,
                    right: cell.ambient_dim(),
                });
            }
        }
        let mut sorted = cells.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidParameter("duplicate cells".into()));
        }
        Ok(Subdivision { r, d, i, cells })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn i(&self) -> usize {
        self.i
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// `sum_j C(r-1, d+1, i*r - j)`, the size the canonical cell list must
    /// have, computable without enumerating anything.
    pub fn expected_cell_count(r: usize, d: usize, i: usize) -> Result<BigUint> {
        check_params(r, d, i)?;
        let ir = checked_ir(r, i)?;
        let mut total = BigUint::zero();
        for j in 1..=d {
            total += composition_count(r - 1, d + 1, ir - j as i64)?;
        }
        Ok(total)
    }

    /// Strict check that the cell list is exactly the canonical one: every
    /// translation is a composition of `i*r - j` with parts in `[0, r-1]`,
    /// and the count matches [`Subdivision::expected_cell_count`]. Together
    /// with distinctness this pins the set exactly.
    pub fn validate_canonical(&self) -> Result<()> {
        let ir = checked_ir(self.r, self.i)?;
        let bound = BigInt::from(self.r - 1);
        for cell in &self.cells {
            let v = cell.translation();
            let expected_sum = BigInt::from(ir - cell.level() as i64);
            if v.sum() != expected_sum {
                return Err(Error::InvalidParameter(format!(
                    "cell {cell} is off the hyperplane: translation sums to {}, want {expected_sum}",
                    v.sum()
                )));
            }
            if v.coords().iter().any(|c| c.is_negative() || c > &bound) {
                return Err(Error::InvalidParameter(format!(
                    "cell {cell} has a translation part outside [0, {bound}]"
                )));
            }
        }
        let expected = Self::expected_cell_count(self.r, self.d, self.i)?;
        if BigUint::from(self.cells.len()) != expected {
            return Err(Error::InvalidParameter(format!(
                "cell count {} differs from the canonical {expected}",
                self.cells.len()
            )));
        }
        Ok(())
    }

    /// Total normalized volume of the cells: `sum_cells A(d, j_cell)`.
    pub fn volume(&self) -> Result<BigUint> {
        let table = EulerianTable::new(self.d)?;
        let mut total = BigUint::zero();
        for cell in &self.cells {
            total += table.get(cell.level() as i64);
        }
        Ok(total)
    }

    /// Run every subdivision check and collect the outcome; failed checks are
    /// recorded with their witnesses instead of aborting.
    pub fn verify(&self, options: &VerifyOptions) -> VerifyReport {
        verify_subdivision(self, options)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(&SubdivisionDto::from(self))
            .expect("subdivision serialization cannot fail")
    }

    /// Parse the JSON form `{"r":R,"d":D,"i":I,"cells":[{"v":[...],"j":J},...]}`.
    /// Applies the shape checks of [`Subdivision::from_cells`].
    pub fn from_json_str(s: &str) -> Result<Self> {
        let dto: SubdivisionDto =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("subdivision JSON: {e}")))?;
        let r = usize::try_from(dto.r).map_err(|_| Error::Parse("r out of range".into()))?;
        let d = usize::try_from(dto.d).map_err(|_| Error::Parse("d out of range".into()))?;
        let i = usize::try_from(dto.i).map_err(|_| Error::Parse("i out of range".into()))?;
        let cells = dto
            .cells
            .into_iter()
            .map(Cell::try_from)
            .collect::<Result<Vec<_>>>()?;
        Self::from_cells(r, d, i, cells)
    }
}

fn check_params(r: usize, d: usize, i: usize) -> Result<()> {
    if r < 1 {
        return Err(Error::InvalidParameter(format!("r must be >= 1, got {r}")));
    }
    if d < 1 {
        return Err(Error::InvalidParameter(format!("d must be >= 1, got {d}")));
    }
    if i < 1 || i > d {
        return Err(Error::InvalidParameter(format!(
            "i must lie in [1, {d}], got {i}"
        )));
    }
    Ok(())
}

fn checked_ir(r: usize, i: usize) -> Result<i64> {
    i64::try_from(i)
        .ok()
        .and_then(|i| i.checked_mul(i64::try_from(r).ok()?))
        .ok_or_else(|| Error::InvalidParameter(format!("i*r overflows: i={i}, r={r}")))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubdivisionDto {
    r: u64,
    d: u64,
    i: u64,
    cells: Vec<CellDto>,
}

impl From<&Subdivision> for SubdivisionDto {
    fn from(s: &Subdivision) -> Self {
        SubdivisionDto {
            r: s.r as u64,
            d: s.d as u64,
            i: s.i as u64,
            cells: s.cells.iter().map(CellDto::from).collect(),
        }
    }
}

/// A cell of `H(r, d, i)` containing the given point of `r * D(d, i)`,
/// chosen deterministically. For an integer point, subtract the indicator of
/// `S = {t : x_t = r}` (or of the smallest positive coordinate when no
/// coordinate reaches `r`); otherwise subtract, from the floor, the indicator
/// of `P = {t : x_t = r}` and use level `|P|` plus the fractional total.
/// Coordinates equal to `r` must be in the subtracted set, or the translation
/// would leave the bounded-composition range.
pub fn covering_witness(x: &RationalPoint, r: usize, d: usize, i: usize) -> Result<Cell> {
    check_params(r, d, i)?;
    if x.ambient_dim() != d {
        return Err(Error::DimensionMismatch {
            left: d,
            right: x.ambient_dim(),
        });
    }
    let ir = checked_ir(r, i)?;
    let sum = x.coordinate_sum();
    if !sum.is_integer() || sum.to_integer() != BigInt::from(ir) {
        return Err(Error::OutsidePolytope(format!(
            "coordinates sum to {sum}, want {ir}"
        )));
    }
    let dilation = Rational::from_integer(BigInt::from(r));
    if x.coords()
        .iter()
        .any(|c| c.is_negative() || c > &dilation)
    {
        return Err(Error::OutsidePolytope(format!(
            "a coordinate of {x:?} is outside [0, {r}]"
        )));
    }
    let profile = x.frac_profile()?;
    let cell = if profile.support.is_empty() {
        let at_max: Vec<usize> = (0..=d)
            .filter(|&t| x.coords()[t] == dilation)
            .collect();
        let subtracted = if at_max.is_empty() {
            let first_positive = (0..=d)
                .find(|&t| x.coords()[t].is_positive())
                .expect("the coordinate sum i*r >= 1 forces a positive coordinate");
            vec![first_positive]
        } else {
            at_max
        };
        let level = subtracted.len();
        Cell::new(profile.floor.minus_indicator(&subtracted), level)?
    } else {
        let at_max: Vec<usize> = profile
            .complement()
            .into_iter()
            .filter(|&t| x.coords()[t] == dilation)
            .collect();
        let level = at_max.len() + profile.frac_sum;
        Cell::new(profile.floor.minus_indicator(&at_max), level)?
    };
    debug_assert_eq!(cell.contains(x), Ok(true));
    Ok(cell)
}

/// Lattice points of the `n`-fold dilation of `D(d, i)`: integer vectors of
/// length `d + 1` with coordinates in `[0, n]` summing to `n*i`, counted by
/// the bounded-composition dynamic programming.
pub fn lattice_point_count(d: usize, i: usize, n: usize) -> Result<BigUint> {
    check_params(1, d, i)?;
    let target = i64::try_from(n)
        .ok()
        .and_then(|n| n.checked_mul(i64::try_from(i).ok()?))
        .ok_or_else(|| Error::InvalidParameter(format!("n*i overflows: n={n}, i={i}")))?;
    composition_count(n, d + 1, target)
}

/// One Ehrhart evaluation: the lattice-point count of a dilation of the
/// hypersimplex. The count is at least 1 for every dilation (the origin
/// dilation is a single point and dilation only adds points).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartSample {
    pub dilation: usize,
    pub count: BigUint,
}

/// The counts for the dilations `0..=max_dilation` of `D(d, i)`.
pub fn ehrhart_samples(d: usize, i: usize, max_dilation: usize) -> Result<Vec<EhrhartSample>> {
    (0..=max_dilation)
        .map(|dilation| {
            Ok(EhrhartSample {
                dilation,
                count: lattice_point_count(d, i, dilation)?,
            })
        })
        .collect()
}

/// Normalized volume of `D(d, i)` by Ehrhart counting: the lattice-point
/// counts of the dilations `n = 0..=d` determine a degree-`d` polynomial
/// whose leading coefficient times `d!` is the `d`-th finite difference of
/// the counts. Fails loudly if that difference is not a positive integer,
/// which would indicate a bug.
pub fn ehrhart_normalized_volume(d: usize, i: usize) -> Result<BigUint> {
    check_params(1, d, i)?;
    let mut diffs: Vec<BigInt> = ehrhart_samples(d, i, d)?
        .into_iter()
        .map(|sample| BigInt::from(sample.count))
        .collect();
    for _ in 0..d {
        diffs = diffs.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    debug_assert_eq!(diffs.len(), 1);
    let leading = diffs.pop().expect("d-th difference of d+1 samples");
    if !leading.is_positive() {
        return Err(Error::Inconsistency(format!(
            "Ehrhart leading difference for (d, i) = ({d}, {i}) is {leading}, expected positive"
        )));
    }
    Ok(leading.to_biguint().expect("checked positive"))
}

/// Knobs for [`Subdivision::verify`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// Number of pseudo-random points of `r * D(d, i)` for the coverage check.
    pub samples: usize,
    /// Seed for the deterministic sampler.
    pub seed: u64,
    /// Check all cell pairs when there are at most this many cells.
    pub pair_exhaustive_cap: usize,
    /// Number of sampled pairs above the cap.
    pub pair_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            samples: 1000,
            seed: 0,
            pair_exhaustive_cap: 500,
            pair_samples: 10_000,
        }
    }
}

/// How the pairwise-face check chose its pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairMode {
    Exhaustive,
    Sampled,
}

impl fmt::Display for PairMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairMode::Exhaustive => write!(f, "exhaustive"),
            PairMode::Sampled => write!(f, "sampled"),
        }
    }
}

/// Outcome of the four subdivision checks. Failures carry a witness string;
/// an empty report section means the check passed.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub r: usize,
    pub d: usize,
    pub i: usize,
    pub cell_count: usize,
    pub seed: u64,
    pub samples: usize,
    pub containment_failures: Vec<String>,
    pub coverage_failures: Vec<String>,
    pub pairs_checked: usize,
    pub pair_mode: PairMode,
    pub face_failures: Vec<String>,
    /// Cells per level, for the volume breakdown.
    pub level_counts: BTreeMap<usize, usize>,
    pub volume_lhs: BigUint,
    pub volume_rhs: BigUint,
}

impl VerifyReport {
    pub fn volume_equal(&self) -> bool {
        self.volume_lhs == self.volume_rhs
    }

    pub fn passed(&self) -> bool {
        self.containment_failures.is_empty()
            && self.coverage_failures.is_empty()
            && self.face_failures.is_empty()
            && self.volume_equal()
    }

    /// The machine-readable summary:
    /// `{"checks":{"containment":...,"coverage":{...},"faces":{...},"volume":{...}}}`.
    pub fn to_json_string(&self) -> String {
        let dto = ReportDto {
            checks: ChecksDto {
                containment: self.containment_failures.is_empty(),
                coverage: CoverageDto {
                    samples: self.samples,
                    failures: self.coverage_failures.len(),
                },
                faces: FacesDto {
                    pairs: self.pairs_checked,
                    failures: self.face_failures.len(),
                },
                volume: VolumeDto {
                    lhs: self.volume_lhs.to_string(),
                    rhs: self.volume_rhs.to_string(),
                    equal: self.volume_equal(),
                },
            },
        };
        serde_json::to_string(&dto).expect("report serialization cannot fail")
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "subdivision: r={} d={} i={}, {} cells",
            self.r, self.d, self.i, self.cell_count
        )?;
        writeln!(
            f,
            "containment: {} cells, {} failures",
            self.cell_count,
            self.containment_failures.len()
        )?;
        list_failures(f, &self.containment_failures)?;
        writeln!(
            f,
            "coverage: {} samples (seed {}), {} failures",
            self.samples,
            self.seed,
            self.coverage_failures.len()
        )?;
        list_failures(f, &self.coverage_failures)?;
        writeln!(
            f,
            "faces: {} pairs ({}), {} failures",
            self.pairs_checked,
            self.pair_mode,
            self.face_failures.len()
        )?;
        list_failures(f, &self.face_failures)?;
        let breakdown = if self.level_counts.is_empty() {
            "0".to_string()
        } else {
            let table = EulerianTable::new(self.d).expect("d >= 1 in any report");
            self.level_counts
                .iter()
                .map(|(j, n)| format!("{n}*{}", table.get(*j as i64)))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        writeln!(
            f,
            "volume: {breakdown} = {}; r^d * A(d,i) = {}; equal={}",
            self.volume_lhs,
            self.volume_rhs,
            self.volume_equal()
        )?;
        write!(f, "result: {}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

fn list_failures(f: &mut fmt::Formatter<'_>, failures: &[String]) -> fmt::Result {
    const SHOWN: usize = 10;
    for line in failures.iter().take(SHOWN) {
        writeln!(f, "  ! {line}")?;
    }
    if failures.len() > SHOWN {
        writeln!(f, "  ! ... and {} more", failures.len() - SHOWN)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ReportDto {
    checks: ChecksDto,
}

#[derive(Serialize)]
struct ChecksDto {
    containment: bool,
    coverage: CoverageDto,
    faces: FacesDto,
    volume: VolumeDto,
}

#[derive(Serialize)]
struct CoverageDto {
    samples: usize,
    failures: usize,
}

#[derive(Serialize)]
struct FacesDto {
    pairs: usize,
    failures: usize,
}

#[derive(Serialize)]
struct VolumeDto {
    lhs: String,
    rhs: String,
    equal: bool,
}

fn verify_subdivision(s: &Subdivision, options: &VerifyOptions) -> VerifyReport {
    let (r, d, i) = (s.r(), s.d(), s.i());
    let table = EulerianTable::new(d).expect("d >= 1 by construction");
    let ir = BigInt::from(i as u64) * BigInt::from(r as u64);
    let r_big = BigInt::from(r as u64);

    // (a) Containment: every vertex of every cell lies in r * D(d, i).
    let mut containment_failures = Vec::new();
    let vertex_sets: Vec<_> = s.cells().iter().map(Cell::vertices).collect();
    for (cell, vertices) in s.cells().iter().zip(&vertex_sets) {
        for vertex in vertices {
            let in_box = vertex
                .coords()
                .iter()
                .all(|c| !c.is_negative() && c <= &r_big);
            if vertex.sum() != ir || !in_box {
                containment_failures.push(format!("cell {cell}: vertex {vertex} is outside"));
            }
        }
    }

    // (b) Coverage: sampled rational points must be claimed by a cell of the
    // family, and the claim must hold.
    let mut rng = SplitMix64::new(options.seed);
    let cell_lookup: HashSet<&Cell> = s.cells().iter().collect();
    let polytope_vertices = dilated_hypersimplex_vertices(d, i);
    let mut coverage_failures = Vec::new();
    for n in 0..options.samples {
        let x = sample_point(&mut rng, r, d, &polytope_vertices);
        match covering_witness(&x, r, d, i) {
            Err(e) => coverage_failures.push(format!("sample {n} ({x:?}): witness failed: {e}")),
            Ok(cell) => {
                if !cell_lookup.contains(&cell) {
                    coverage_failures
                        .push(format!("sample {n} ({x:?}): witness {cell} not in the family"));
                } else if cell.contains(&x) != Ok(true) {
                    coverage_failures
                        .push(format!("sample {n} ({x:?}): witness {cell} does not contain it"));
                }
            }
        }
    }

    // (c) Pairwise faces: intersections are faces of both cells and distinct
    // cells never share interior (dimension < d).
    let mut face_failures = Vec::new();
    let n_cells = s.cells().len();
    let (pair_mode, pairs): (PairMode, Vec<(usize, usize)>) =
        if n_cells < 2 || n_cells <= options.pair_exhaustive_cap {
            let mut pairs = Vec::new();
            for a in 0..n_cells {
                for b in (a + 1)..n_cells {
                    pairs.push((a, b));
                }
            }
            (PairMode::Exhaustive, pairs)
        } else {
            let mut pairs = Vec::with_capacity(options.pair_samples);
            for _ in 0..options.pair_samples {
                let a = rng.below(n_cells as u64) as usize;
                let mut b = rng.below(n_cells as u64 - 1) as usize;
                if b >= a {
                    b += 1;
                }
                pairs.push((a.min(b), a.max(b)));
            }
            (PairMode::Sampled, pairs)
        };
    for &(a, b) in &pairs {
        let (c1, c2) = (&s.cells()[a], &s.cells()[b]);
        match c1.intersect(c2) {
            Err(e) => face_failures.push(format!("{c1} vs {c2}: {e}")),
            Ok(face) => {
                if let Some(dim) = face.dim() {
                    if dim >= d {
                        face_failures.push(format!(
                            "{c1} vs {c2}: intersection has dimension {dim}, overlapping interiors"
                        ));
                    }
                    let face_vertices = face.vertices().expect("nonempty face");
                    if !face_vertices.is_subset(&vertex_sets[a])
                        || !face_vertices.is_subset(&vertex_sets[b])
                    {
                        face_failures
                            .push(format!("{c1} vs {c2}: intersection is not a common face"));
                    }
                }
            }
        }
    }

    // (d) Volume additivity.
    let mut level_counts: BTreeMap<usize, usize> = BTreeMap::new();
    for cell in s.cells() {
        *level_counts.entry(cell.level()).or_insert(0) += 1;
    }
    let mut volume_lhs = BigUint::zero();
    for (&j, &count) in &level_counts {
        volume_lhs += table.get(j as i64) * BigUint::from(count);
    }
    let volume_rhs =
        BigUint::from(r).pow(u32::try_from(d).expect("d fits u32")) * table.get(i as i64);

    VerifyReport {
        r,
        d,
        i,
        cell_count: n_cells,
        seed: options.seed,
        samples: options.samples,
        containment_failures,
        coverage_failures,
        pairs_checked: pairs.len(),
        pair_mode,
        face_failures,
        level_counts,
        volume_lhs,
        volume_rhs,
    }
}

/// The vertices of `r * D(d, i)` are `r * e_T` over all `i`-element subsets
/// `T` of the `d + 1` coordinates; this returns the supports `T` in
/// lexicographic order.
fn dilated_hypersimplex_vertices(d: usize, i: usize) -> Vec<Vec<usize>> {
    let all: Vec<usize> = (0..=d).collect();
    crate::geometry::index_combinations(&all, i)
}

/// A pseudo-random rational convex combination of the vertices `r * e_T` of
/// the dilated hypersimplex: pick a denominator `D` in `[1, 100]`, distribute
/// `D` unit weights over the vertices, and combine. Every weight and hence
/// every coordinate has denominator at most 100, and the point lies on the
/// hyperplane by construction.
fn sample_point(
    rng: &mut SplitMix64,
    r: usize,
    d: usize,
    vertex_supports: &[Vec<usize>],
) -> RationalPoint {
    let denominator = 1 + rng.below(100);
    let mut weight_sums = vec![BigInt::zero(); d + 1];
    for _ in 0..denominator {
        let pick = rng.below(vertex_supports.len() as u64) as usize;
        for &t in &vertex_supports[pick] {
            weight_sums[t] += 1;
        }
    }
    let coords = weight_sums
        .into_iter()
        .map(|w| Rational::new(w * BigInt::from(r), BigInt::from(denominator)))
        .collect();
    RationalPoint::new(coords).expect("d + 1 >= 2 coordinates")
}

/// SplitMix64. Hand-rolled so verification reports are bit-identical across
/// builds and platforms for a given seed.
pub(crate) struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub(crate) fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, n)` by rejection, so no modulo bias.
    pub(crate) fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        let zone = u64::MAX - u64::MAX % n;
        loop {
            let raw = self.next_u64();
            if raw < zone {
                return raw % n;
            }
        }
    }
}
