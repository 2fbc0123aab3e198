//! Kodaira fibers, trivial lattices, Mordell–Weil bookkeeping and the
//! `U ⊕ A5^3` Néron–Severi model.
//!
//! The fiber dictionary (root type, component count `m_v`, multiplicity-one
//! component count `m_v^(1)`) is frozen reference data:
//!
//! | fiber  | root    | m_v | m_v^(1) |
//! |--------|---------|-----|---------|
//! | I_1    | none    | 1   | 1       |
//! | I_n    | A_{n-1} | n   | n       |
//! | II     | none    | 1   | 1       |
//! | III    | A_1     | 2   | 2       |
//! | IV     | A_2     | 3   | 3       |
//! | I*_n   | D_{n+4} | n+5 | 4       |
//! | IV*    | E_6     | 7   | 3       |
//! | III*   | E_7     | 8   | 2       |
//! | II*    | E_8     | 9   | 1       |

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmat::{column_span_basis, is_perfect_square, snf, IntMatrix};
use crate::lattice::{catalog, direct_sum, CatalogName, Embedding, Lattice, LatticeError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FibrationError {
    NotNegativeDefinite,
    NotARoot { norm: BigInt },
    BadFiberTag(String),
    RootRankSumExceedsK3 { sum: usize },
    Lattice(LatticeError),
}

impl fmt::Display for FibrationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FibrationError::NotNegativeDefinite => write!(f, "lattice is not negative definite"),
            FibrationError::NotARoot { norm } => write!(f, "vector has norm {norm}, not -2"),
            FibrationError::BadFiberTag(s) => write!(f, "unrecognized Kodaira fiber tag `{s}`"),
            FibrationError::RootRankSumExceedsK3 { sum } => {
                write!(f, "root ranks sum to {sum} > 18, impossible on a K3 surface")
            }
            FibrationError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for FibrationError {}

impl From<LatticeError> for FibrationError {
    fn from(e: LatticeError) -> Self {
        FibrationError::Lattice(e)
    }
}

/// Irreducible ADE types, ordered `A_1 < A_2 < ... < D_4 < ... < E_6 < E_7 < E_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E6 => write!(f, "E6"),
            DynkinType::E7 => write!(f, "E7"),
            DynkinType::E8 => write!(f, "E8"),
        }
    }
}

impl DynkinType {
    pub fn rank(&self) -> usize {
        match *self {
            DynkinType::A(n) => n,
            DynkinType::D(n) => n,
            DynkinType::E6 => 6,
            DynkinType::E7 => 7,
            DynkinType::E8 => 8,
        }
    }

    pub fn catalog_name(&self) -> CatalogName {
        match *self {
            DynkinType::A(n) => CatalogName::A(n),
            DynkinType::D(n) => CatalogName::D(n),
            DynkinType::E6 => CatalogName::E(6),
            DynkinType::E7 => CatalogName::E(7),
            DynkinType::E8 => CatalogName::E(8),
        }
    }

    pub fn lattice(&self) -> Lattice {
        catalog(self.catalog_name()).expect("catalog names from the dictionary are valid")
    }

    /// Number of (-2)-roots: `n(n+1)` for A, `2n(n-1)` for D, 72/126/240 for E.
    pub fn root_count(&self) -> usize {
        match *self {
            DynkinType::A(n) => n * (n + 1),
            DynkinType::D(n) => 2 * n * (n - 1),
            DynkinType::E6 => 72,
            DynkinType::E7 => 126,
            DynkinType::E8 => 240,
        }
    }
}

/// Kodaira types of singular fibers of an elliptic surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum KodairaFiber {
    /// `I_n`, `n >= 1`.
    I(usize),
    /// `I*_n`, `n >= 0`.
    IStar(usize),
    II,
    III,
    IV,
    IIStar,
    IIIStar,
    IVStar,
}

impl fmt::Display for KodairaFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KodairaFiber::I(n) => write!(f, "I{n}"),
            KodairaFiber::IStar(n) => write!(f, "I*{n}"),
            KodairaFiber::II => write!(f, "II"),
            KodairaFiber::III => write!(f, "III"),
            KodairaFiber::IV => write!(f, "IV"),
            KodairaFiber::IIStar => write!(f, "II*"),
            KodairaFiber::IIIStar => write!(f, "III*"),
            KodairaFiber::IVStar => write!(f, "IV*"),
        }
    }
}

impl std::str::FromStr for KodairaFiber {
    type Err = FibrationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || FibrationError::BadFiberTag(s.to_string());
        match s {
            "II" => return Ok(KodairaFiber::II),
            "III" => return Ok(KodairaFiber::III),
            "IV" => return Ok(KodairaFiber::IV),
            "II*" => return Ok(KodairaFiber::IIStar),
            "III*" => return Ok(KodairaFiber::IIIStar),
            "IV*" => return Ok(KodairaFiber::IVStar),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("I*") {
            let n: usize = rest.parse().map_err(|_| bad())?;
            return Ok(KodairaFiber::IStar(n));
        }
        if let Some(rest) = s.strip_prefix('I') {
            let n: usize = rest.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(bad());
            }
            return Ok(KodairaFiber::I(n));
        }
        Err(bad())
    }
}

impl KodairaFiber {
    pub fn is_valid(&self) -> bool {
        !matches!(self, KodairaFiber::I(0))
    }

    /// Root lattice spanned by the non-identity components, if any.
    pub fn root_type(&self) -> Option<DynkinType> {
        match *self {
            KodairaFiber::I(n) if n >= 2 => Some(DynkinType::A(n - 1)),
            KodairaFiber::I(_) => None,
            KodairaFiber::II => None,
            KodairaFiber::III => Some(DynkinType::A(1)),
            KodairaFiber::IV => Some(DynkinType::A(2)),
            KodairaFiber::IStar(n) => Some(DynkinType::D(n + 4)),
            KodairaFiber::IVStar => Some(DynkinType::E6),
            KodairaFiber::IIIStar => Some(DynkinType::E7),
            KodairaFiber::IIStar => Some(DynkinType::E8),
        }
    }

    /// `m_v`: number of irreducible components.
    pub fn components(&self) -> usize {
        match *self {
            KodairaFiber::I(n) => n,
            KodairaFiber::II => 1,
            KodairaFiber::III => 2,
            KodairaFiber::IV => 3,
            KodairaFiber::IStar(n) => n + 5,
            KodairaFiber::IVStar => 7,
            KodairaFiber::IIIStar => 8,
            KodairaFiber::IIStar => 9,
        }
    }

    /// `m_v^(1)`: number of multiplicity-one components.
    pub fn multiplicity_one_components(&self) -> usize {
        match *self {
            KodairaFiber::I(n) => n,
            KodairaFiber::II => 1,
            KodairaFiber::III => 2,
            KodairaFiber::IV => 3,
            KodairaFiber::IStar(_) => 4,
            KodairaFiber::IVStar => 3,
            KodairaFiber::IIIStar => 2,
            KodairaFiber::IIStar => 1,
        }
    }

    pub fn root_rank(&self) -> usize {
        self.root_type().map_or(0, |t| t.rank())
    }
}

/// A multiset of Kodaira fibers, kept sorted. The root ranks may sum to at
/// most 18 on a K3 surface.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberConfiguration {
    fibers: Vec<KodairaFiber>,
}

impl fmt::Display for FiberConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tags: Vec<String> = self.fibers.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", tags.join(","))
    }
}

impl FiberConfiguration {
    pub fn new(mut fibers: Vec<KodairaFiber>) -> Result<Self, FibrationError> {
        for fb in &fibers {
            if !fb.is_valid() {
                return Err(FibrationError::BadFiberTag(fb.to_string()));
            }
        }
        let sum: usize = fibers.iter().map(|f| f.root_rank()).sum();
        if sum > 18 {
            return Err(FibrationError::RootRankSumExceedsK3 { sum });
        }
        fibers.sort();
        Ok(FiberConfiguration { fibers })
    }

    pub fn parse(csv: &str) -> Result<Self, FibrationError> {
        let fibers: Vec<KodairaFiber> =
            csv.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect::<Result<_, _>>()?;
        Self::new(fibers)
    }

    pub fn fibers(&self) -> &[KodairaFiber] {
        &self.fibers
    }

    pub fn root_rank_sum(&self) -> usize {
        self.fibers.iter().map(|f| f.root_rank()).sum()
    }
}

/// The trivial sublattice of an elliptic fibration with these singular
/// fibers: `U` plus the root lattice of every fiber that has one.
pub fn trivial_lattice(cfg: &FiberConfiguration) -> Lattice {
    let mut parts = vec![catalog(CatalogName::U).expect("U exists")];
    for f in cfg.fibers() {
        if let Some(t) = f.root_type() {
            parts.push(t.lattice());
        }
    }
    direct_sum(&parts).expect("summands are nondegenerate")
}

/// Shioda–Tate: `ρ(X) = r + 2 + Σ (m_v - 1)`.
pub fn picard_from_config(cfg: &FiberConfiguration, mw_rank: usize) -> usize {
    mw_rank + 2 + cfg.fibers().iter().map(|f| f.components() - 1).sum::<usize>()
}

/// `(Π m_v^(1)) / n^2` as an exact rational, flagged when non-integral
/// (which falsifies the hypothesis that `n` is the torsion order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigDeterminant {
    pub value: BigRational,
    pub is_integral: bool,
}

/// Determinant of the transcendental / Néron–Severi lattice predicted by a
/// fiber configuration with Mordell–Weil rank 0 and torsion order `n`.
pub fn det_from_config(cfg: &FiberConfiguration, torsion_order: usize) -> ConfigDeterminant {
    assert!(torsion_order >= 1, "torsion order must be positive");
    let mut prod = BigInt::one();
    for f in cfg.fibers() {
        prod *= BigInt::from(f.multiplicity_one_components());
    }
    let n2 = BigInt::from(torsion_order) * BigInt::from(torsion_order);
    let value = BigRational::new(prod, n2);
    ConfigDeterminant { is_integral: value.is_integer(), value }
}

/// Mordell–Weil invariants of `NS/T` for a trivial sublattice `T ⊆ NS` given
/// as an embedding: the free rank and the torsion order.
pub fn mw_invariants(trivial: &Embedding) -> (usize, BigInt) {
    let rank = trivial.ambient().rank() - trivial.sub_rank();
    let torsion: BigInt = snf(trivial.basis()).invariant_factors().iter().product();
    (rank, torsion)
}

/// Necessary condition for the trivial lattice to sit at finite index inside
/// `NS`: `d(trivial) / d(NS)` must be the square of a positive integer.
pub fn square_obstruction(d_trivial: &BigInt, d_ns: &BigInt) -> bool {
    if !d_trivial.is_positive() || !d_ns.is_positive() {
        return false;
    }
    let (q, r) = num_integer::Integer::div_rem(d_trivial, d_ns);
    r.is_zero() && is_perfect_square(&q)
}

/// One candidate configuration from [`search_configs`] with its verdict.
#[derive(Debug, Clone)]
pub struct ConfigVerdict {
    pub config: FiberConfiguration,
    pub trivial_det: BigInt,
    pub trivial_rank: usize,
    pub square_ok: bool,
}

/// Exhaustively extend `required` by `slots` fibers from `allowed` whose root
/// ranks sum to `rank_sum_target`, annotating each result with the trivial
/// lattice determinant and the square obstruction against `d_ns`.
pub fn search_configs(
    required: &FiberConfiguration,
    slots: usize,
    allowed: &[KodairaFiber],
    rank_sum_target: usize,
    d_ns: &BigInt,
) -> Vec<ConfigVerdict> {
    let mut allowed = allowed.to_vec();
    allowed.sort();
    allowed.dedup();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    pick_slots(required, slots, &allowed, 0, rank_sum_target, d_ns, &mut chosen, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn pick_slots(
    required: &FiberConfiguration,
    slots: usize,
    allowed: &[KodairaFiber],
    from: usize,
    rank_remaining: usize,
    d_ns: &BigInt,
    chosen: &mut Vec<KodairaFiber>,
    out: &mut Vec<ConfigVerdict>,
) {
    if chosen.len() == slots {
        if rank_remaining != 0 {
            return;
        }
        let mut fibers = required.fibers().to_vec();
        fibers.extend(chosen.iter().copied());
        let Ok(config) = FiberConfiguration::new(fibers) else { return };
        let trivial = trivial_lattice(&config);
        let trivial_det = trivial.abs_det();
        let square_ok = square_obstruction(&trivial_det, d_ns);
        out.push(ConfigVerdict { config, trivial_det, trivial_rank: trivial.rank(), square_ok });
        return;
    }
    for i in from..allowed.len() {
        let r = allowed[i].root_rank();
        if r > rank_remaining {
            continue;
        }
        chosen.push(allowed[i]);
        pick_slots(required, slots, allowed, i, rank_remaining - r, d_ns, chosen, out);
        chosen.pop();
    }
}

// ---------------------------------------------------------------------------
// (-2)-root enumeration
// ---------------------------------------------------------------------------

/// All vectors of norm exactly -2 in a negative definite lattice, in
/// lexicographic order. Exact Fincke–Pohst: the positive form `-G` is
/// diagonalized rationally and coordinates are bounded level by level.
pub fn enumerate_roots(l: &Lattice) -> Result<Vec<Vec<BigInt>>, FibrationError> {
    if !l.is_negative_definite() {
        return Err(FibrationError::NotNegativeDefinite);
    }
    let n = l.rank();
    // Cholesky-style decomposition of Q = -G: Q(x) = Σ d_i (x_i + Σ_{j>i} u_ij x_j)^2
    let mut a = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            a[i][j] = BigRational::from(-l.gram().at(i, j));
        }
    }
    let mut d = vec![BigRational::zero(); n];
    let mut u = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        d[i] = a[i][i].clone();
        debug_assert!(d[i].is_positive(), "positive definite by the signature check");
        for j in (i + 1)..n {
            u[i][j] = &a[i][j] / &d[i];
        }
        for k in (i + 1)..n {
            for m in k..n {
                let v = &a[k][m] - &a[i][k] * &a[i][m] / &d[i];
                a[k][m] = v.clone();
                a[m][k] = v;
            }
        }
    }
    let target = BigRational::from(BigInt::from(2));
    let mut x = vec![BigInt::zero(); n];
    let mut found = Vec::new();
    descend(&d, &u, &target, n, &mut x, &mut found);
    found.sort();
    Ok(found)
}

fn descend(
    d: &[BigRational],
    u: &[Vec<BigRational>],
    remaining: &BigRational,
    level: usize,
    x: &mut Vec<BigInt>,
    found: &mut Vec<Vec<BigInt>>,
) {
    if level == 0 {
        if remaining.is_zero() {
            found.push(x.clone());
        }
        return;
    }
    let i = level - 1;
    let mut center = BigRational::zero();
    for j in level..x.len() {
        center += &u[i][j] * BigRational::from(x[j].clone());
    }
    // |x_i + center| <= sqrt(remaining / d_i)
    let bound = floor_sqrt_rational(&(remaining / &d[i])) + BigInt::one();
    let lo = (-BigRational::from(bound.clone()) - &center).ceil().to_integer();
    let hi = (BigRational::from(bound) - &center).floor().to_integer();
    let mut xi = lo;
    while xi <= hi {
        let off = BigRational::from(xi.clone()) + &center;
        let used = &d[i] * &off * &off;
        if &used <= remaining {
            x[i] = xi.clone();
            let rem = remaining - &used;
            descend(d, u, &rem, i, x, found);
            x[i] = BigInt::zero();
        }
        xi += BigInt::one();
    }
}

/// Largest integer `t` with `t^2 <= p/q` (requires `p/q >= 0`).
fn floor_sqrt_rational(v: &BigRational) -> BigInt {
    debug_assert!(!v.is_negative());
    let p = v.numer();
    let q = v.denom();
    let mut t = (p * q).sqrt() / q;
    while &(&t + 1u8) * &(&t + 1u8) * q <= p * q {
        t += 1u8;
    }
    while &t * &t * q > p * q {
        t -= 1u8;
    }
    t
}

/// The reflection `s_δ(x) = x + <x, δ> δ` in a (-2)-root.
pub fn reflection(l: &Lattice, delta: &[BigInt], x: &[BigInt]) -> Result<Vec<BigInt>, FibrationError> {
    let norm = l.norm(delta);
    if norm != BigInt::from(-2) {
        return Err(FibrationError::NotARoot { norm });
    }
    let c = l.pairing(x, delta);
    Ok(x.iter().zip(delta).map(|(xi, di)| xi + &c * di).collect())
}

/// Result of matching a negative definite lattice against sums of ADE root
/// lattices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDecomposition {
    /// ADE components of the sublattice generated by the roots, sorted.
    pub components: Vec<DynkinType>,
    /// True iff the roots generate the whole lattice (so the decomposition
    /// describes the lattice itself, not a proper sublattice).
    pub generated_by_roots: bool,
    /// Rank of the root sublattice.
    pub root_span_rank: usize,
}

/// Classify a negative definite lattice as a sum of irreducible root
/// lattices; when the roots only generate a proper sublattice the
/// decomposition of that sublattice is reported with `generated_by_roots`
/// set to false.
pub fn classify_root_lattice(l: &Lattice) -> Result<RootDecomposition, FibrationError> {
    let roots = enumerate_roots(l)?;
    if roots.is_empty() {
        return Ok(RootDecomposition {
            components: vec![],
            generated_by_roots: l.rank() == 0,
            root_span_rank: 0,
        });
    }
    let n = l.rank();
    let root_mat = IntMatrix::from_cols(roots.clone()).expect("uniform length");
    let span = column_span_basis(&root_mat);
    let span_rank = span.cols();
    let generated = span_rank == n && {
        let f = snf(&span).invariant_factors();
        f.iter().all(|d| d.is_one())
    };

    // generic linear functional: positive on a choice of half the roots
    let max_coord = roots
        .iter()
        .flat_map(|r| r.iter().map(|c| c.abs()))
        .max()
        .unwrap_or_else(BigInt::zero);
    let base = max_coord + BigInt::from(2);
    let phi = |v: &[BigInt]| -> BigInt {
        let mut acc = BigInt::zero();
        let mut pw = BigInt::one();
        for c in v {
            acc += c * &pw;
            pw *= &base;
        }
        acc
    };
    let positive: Vec<Vec<BigInt>> =
        roots.iter().filter(|r| phi(r).is_positive()).cloned().collect();
    debug_assert_eq!(positive.len() * 2, roots.len());
    let pos_set: std::collections::BTreeSet<Vec<BigInt>> = positive.iter().cloned().collect();
    // simple roots: positive roots that are not sums of two positive roots
    let simple: Vec<Vec<BigInt>> = positive
        .iter()
        .filter(|delta| {
            !positive.iter().any(|alpha| {
                let diff: Vec<BigInt> = delta.iter().zip(alpha.iter()).map(|(a, b)| a - b).collect();
                diff.iter().any(|c| !c.is_zero()) && pos_set.contains(&diff)
            })
        })
        .cloned()
        .collect();
    assert_eq!(simple.len(), span_rank, "simple root count must equal the root span rank");

    // adjacency: distinct simple roots pair to 0 or 1 in this convention
    let k = simple.len();
    let mut adj = vec![vec![false; k]; k];
    for i in 0..k {
        for j in (i + 1)..k {
            let p = l.pairing(&simple[i], &simple[j]);
            assert!(
                p.is_zero() || p.is_one(),
                "simple roots pair to {p}, expected 0 or 1"
            );
            if p.is_one() {
                adj[i][j] = true;
                adj[j][i] = true;
            }
        }
    }
    // connected components
    let mut comp_id = vec![usize::MAX; k];
    let mut next = 0usize;
    for start in 0..k {
        if comp_id[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        comp_id[start] = next;
        while let Some(v) = stack.pop() {
            for w in 0..k {
                if adj[v][w] && comp_id[w] == usize::MAX {
                    comp_id[w] = next;
                    stack.push(w);
                }
            }
        }
        next += 1;
    }
    let mut components = Vec::new();
    for c in 0..next {
        let nodes: Vec<usize> = (0..k).filter(|&i| comp_id[i] == c).collect();
        components.push(identify_diagram(&nodes, &adj));
    }
    components.sort();
    Ok(RootDecomposition { components, generated_by_roots: generated, root_span_rank: span_rank })
}

/// Match a connected simply-laced diagram to its ADE type.
fn identify_diagram(nodes: &[usize], adj: &[Vec<bool>]) -> DynkinType {
    let deg = |v: usize| nodes.iter().filter(|&&w| adj[v][w]).count();
    let branch: Vec<usize> = nodes.iter().copied().filter(|&v| deg(v) >= 3).collect();
    match branch.len() {
        0 => DynkinType::A(nodes.len()),
        1 => {
            let b = branch[0];
            assert_eq!(deg(b), 3, "node of degree > 3 in a definite root lattice");
            // arm lengths in nodes, excluding the branch point
            let mut arms: Vec<usize> = nodes
                .iter()
                .filter(|&&v| adj[b][v])
                .map(|&first| {
                    let mut len = 1;
                    let mut prev = b;
                    let mut cur = first;
                    loop {
                        let next = nodes.iter().find(|&&w| adj[cur][w] && w != prev);
                        match next {
                            Some(&w) => {
                                len += 1;
                                prev = cur;
                                cur = w;
                            }
                            None => break len,
                        }
                    }
                })
                .collect();
            arms.sort();
            match arms.as_slice() {
                [1, 1, m] => DynkinType::D(m + 3),
                [1, 2, 2] => DynkinType::E6,
                [1, 2, 3] => DynkinType::E7,
                [1, 2, 4] => DynkinType::E8,
                _ => unreachable!("arm profile {arms:?} cannot occur in a definite root lattice"),
            }
        }
        _ => unreachable!("two branch nodes cannot occur in a definite root lattice"),
    }
}

// ---------------------------------------------------------------------------
// The U ⊕ A5^3 Néron–Severi model
// ---------------------------------------------------------------------------

/// The lattice `U ⊕ A5^3` with its named vectors, in the frozen basis order
/// `E, F, Θ^1_1..Θ^1_5, Θ^2_1..Θ^2_5, Θ^3_1..Θ^3_5`.
///
/// `E` is the class of a general fiber, `g = F - E` the zero section, and
/// `Θ^k_i` the non-identity components of the three `I_6` fibers; the derived
/// `Θ^k_0 = E - Σ_i Θ^k_i` completes each affine 6-cycle.
#[derive(Debug, Clone)]
pub struct NsModel {
    lattice: Lattice,
}

pub fn build_ns_model() -> NsModel {
    let lattice = crate::lattice::catalog_sum(&[
        CatalogName::U,
        CatalogName::A(5),
        CatalogName::A(5),
        CatalogName::A(5),
    ])
    .expect("catalog sum is valid");
    NsModel { lattice }
}

impl NsModel {
    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn rank(&self) -> usize {
        17
    }

    fn unit(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); 17];
        v[i] = BigInt::one();
        v
    }

    /// Class of a general fiber.
    pub fn fiber_class(&self) -> Vec<BigInt> {
        self.unit(0)
    }

    /// `F = E + [section]`, the second hyperbolic generator.
    pub fn fiber_plus_section(&self) -> Vec<BigInt> {
        self.unit(1)
    }

    /// The zero section `g = F - E`, a (-2)-class meeting every `Θ^k_0`.
    pub fn section(&self) -> Vec<BigInt> {
        sub(&self.fiber_plus_section(), &self.fiber_class())
    }

    /// `Θ^k_i` for `k = 1..3`: the basis vectors for `i = 1..5`, and the
    /// derived `Θ^k_0 = E - Σ_{i=1..5} Θ^k_i`.
    pub fn theta(&self, k: usize, i: usize) -> Vec<BigInt> {
        assert!((1..=3).contains(&k) && i <= 5);
        if i >= 1 {
            self.unit(2 + 5 * (k - 1) + (i - 1))
        } else {
            let mut v = self.fiber_class();
            for j in 1..=5 {
                v = sub(&v, &self.theta(k, j));
            }
            v
        }
    }

    /// The IV*-shaped divisor `3g + 2(Θ^1_0 + Θ^2_0 + Θ^3_0) + (Θ^1_1 + Θ^2_1 + Θ^3_1)`.
    pub fn iv_star_divisor(&self) -> Vec<BigInt> {
        let mut v = scale(&self.section(), 3);
        for k in 1..=3 {
            v = add(&v, &scale(&self.theta(k, 0), 2));
            v = add(&v, &self.theta(k, 1));
        }
        v
    }

    /// `E_k = E_IV* - (Θ^k_3 + Θ^k_4)`.
    pub fn iv_star_minus_pair(&self, k: usize) -> Vec<BigInt> {
        sub(&sub(&self.iv_star_divisor(), &self.theta(k, 3)), &self.theta(k, 4))
    }

    /// `Θ^k = Θ^k_1 + 2Θ^k_2 + Θ^k_3 - Θ^k_5`.
    pub fn theta_mix(&self, k: usize) -> Vec<BigInt> {
        let mut v = self.theta(k, 1);
        v = add(&v, &scale(&self.theta(k, 2), 2));
        v = add(&v, &self.theta(k, 3));
        sub(&v, &self.theta(k, 5))
    }

    /// `A = 2·E_IV* + Θ^1`.
    pub fn a_divisor(&self) -> Vec<BigInt> {
        add(&scale(&self.iv_star_divisor(), 2), &self.theta_mix(1))
    }

    pub fn pairing(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        self.lattice.pairing(x, y)
    }

    pub fn norm(&self, x: &[BigInt]) -> BigInt {
        self.lattice.norm(x)
    }
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn scale(a: &[BigInt], k: i64) -> Vec<BigInt> {
    a.iter().map(|x| x * BigInt::from(k)).collect()
}

/// One named check with its outcome.
#[derive(Debug, Clone)]
pub struct Check {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone)]
pub struct ModelReport {
    pub checks: Vec<Check>,
}

impl ModelReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Verify every pairing identity of the model: `g^2 = -2`, `<g, E> = 1`,
/// `<Θ^k_0, g> = 1`, each `{Θ^k_0..Θ^k_5}` an affine 6-cycle with adjacent
/// pairings 1, cross-block orthogonality, and `E_IV*^2 = 0`.
pub fn verify_model(m: &NsModel) -> ModelReport {
    let mut checks = Vec::new();
    let mut push = |name: String, ok: bool| checks.push(Check { name, ok });
    let g = m.section();
    let e = m.fiber_class();
    push("g^2 = -2".into(), m.norm(&g) == BigInt::from(-2));
    push("<g, E> = 1".into(), m.pairing(&g, &e) == BigInt::one());
    push("E^2 = 0".into(), m.norm(&e).is_zero());
    for k in 1..=3 {
        push(format!("<Theta^{k}_0, g> = 1"), m.pairing(&m.theta(k, 0), &g) == BigInt::one());
        for i in 1..=5 {
            push(format!("<Theta^{k}_{i}, g> = 0"), m.pairing(&m.theta(k, i), &g).is_zero());
        }
        // affine 6-cycle
        for i in 0..=5 {
            for j in i..=5 {
                let p = m.pairing(&m.theta(k, i), &m.theta(k, j));
                let expected = if i == j {
                    BigInt::from(-2)
                } else if (j - i) == 1 || (i, j) == (0, 5) {
                    BigInt::one()
                } else {
                    BigInt::zero()
                };
                push(format!("<Theta^{k}_{i}, Theta^{k}_{j}> = {expected}"), p == expected);
            }
        }
    }
    for k in 1..=3 {
        for l in (k + 1)..=3 {
            let mut ok = true;
            for i in 0..=5 {
                for j in 0..=5 {
                    ok &= m.pairing(&m.theta(k, i), &m.theta(l, j)).is_zero();
                }
            }
            push(format!("blocks {k} and {l} orthogonal"), ok);
        }
    }
    push("E_IV*^2 = 0".into(), m.norm(&m.iv_star_divisor()).is_zero());
    ModelReport { checks }
}

/// Everything computed by the divisor analysis on the model: the IV*-shaped
/// fiber, the sublattice `S` spanned by the listed components, its orthogonal
/// complement with Gram, signature and root count, and the determinant-ratio
/// square checks against the candidate trivial lattices.
#[derive(Debug, Clone)]
pub struct Section8Report {
    pub include_section_in_s: bool,
    pub e_iv_star_norm: BigInt,
    pub iv_star_shape_ok: bool,
    pub rank_s: usize,
    pub comp_rank: usize,
    pub comp_gram: IntMatrix,
    pub comp_signature: (usize, usize),
    /// Number of (-2)-roots in the complement, when it is negative definite.
    pub comp_root_count: Option<usize>,
    /// `A`, `Θ^2`, `Θ^3` all lie in the complement.
    pub named_generators_in_comp: bool,
    /// Gram matrix of `(A, Θ^2, Θ^3)`.
    pub named_gram: IntMatrix,
    /// When the complement has rank 3: do the three named divisors span it?
    pub named_span_is_comp: Option<bool>,
    /// `(label, ratio d(NS)/d(candidate), is a rational square)` for the two
    /// candidate trivial lattices `U+E6+A3^3` and `U+A2+A3+D4`.
    pub ratio_checks: Vec<(String, BigRational, bool)>,
}

pub fn section8_analysis(m: &NsModel, include_section_in_s: bool) -> Section8Report {
    let e_div = m.iv_star_divisor();
    let e_iv_star_norm = m.norm(&e_div);

    // IV* shape: central node g pairing 1 into each arm Θ^k_0 - Θ^k_1,
    // no pairings between arms, multiplicities (3; 2,1 per arm).
    let g = m.section();
    let mut shape_ok = true;
    for k in 1..=3 {
        shape_ok &= m.pairing(&g, &m.theta(k, 0)) == BigInt::one();
        shape_ok &= m.pairing(&m.theta(k, 0), &m.theta(k, 1)) == BigInt::one();
        shape_ok &= m.pairing(&g, &m.theta(k, 1)).is_zero();
        for l in 1..=3 {
            if l != k {
                shape_ok &= m.pairing(&m.theta(k, 0), &m.theta(l, 1)).is_zero();
                shape_ok &= m.pairing(&m.theta(k, 0), &m.theta(l, 0)).is_zero();
                shape_ok &= m.pairing(&m.theta(k, 1), &m.theta(l, 1)).is_zero();
            }
        }
    }

    // S: components Θ^k_l (k = 1..3, l = 0,1,3,4) and Θ^1_2, plus optionally g
    let mut gens: Vec<Vec<BigInt>> = Vec::new();
    for k in 1..=3 {
        for l in [0usize, 1, 3, 4] {
            gens.push(m.theta(k, l));
        }
    }
    gens.push(m.theta(1, 2));
    if include_section_in_s {
        gens.push(g.clone());
    }
    let s_emb = Embedding::from_vectors(m.lattice().clone(), &gens)
        .expect("the listed components are independent");
    let rank_s = s_emb.sub_rank();
    let comp = s_emb.orthogonal_complement().expect("S is nondegenerate");
    let comp_rank = comp.sub_rank();
    let comp_gram = comp.induced_gram();
    let comp_lat = comp.induced_lattice();
    let comp_signature = comp_lat.signature();
    let comp_root_count = if comp_lat.is_negative_definite() {
        Some(enumerate_roots(&comp_lat).expect("negative definite").len())
    } else {
        None
    };

    let a = m.a_divisor();
    let t2 = m.theta_mix(2);
    let t3 = m.theta_mix(3);
    let named_in_comp = [&a, &t2, &t3].iter().all(|v| comp.coordinates_of(v).is_some());
    let mut named_gram = IntMatrix::zero(3, 3);
    for (i, x) in [&a, &t2, &t3].iter().enumerate() {
        for (j, y) in [&a, &t2, &t3].iter().enumerate() {
            named_gram.set(i, j, m.pairing(x, y));
        }
    }
    let named_span_is_comp = if comp_rank == 3 && named_in_comp {
        let named_det = crate::exactmat::det_exact(&named_gram).expect("3x3").abs();
        Some(named_det == comp_lat.abs_det())
    } else {
        None
    };

    // determinant ratios against the candidate trivial lattices
    let d_ns = BigRational::from(BigInt::from(216));
    let mut ratio_checks = Vec::new();
    for (label, names) in [
        ("U+E6+A3+A3+A3", vec![CatalogName::U, CatalogName::E(6), CatalogName::A(3), CatalogName::A(3), CatalogName::A(3)]),
        ("U+A2+A3+D4", vec![CatalogName::U, CatalogName::A(2), CatalogName::A(3), CatalogName::D(4)]),
    ] {
        let cand = crate::lattice::catalog_sum(&names).expect("catalog names");
        let ratio = &d_ns / BigRational::from(cand.abs_det());
        let sq = crate::exactmat::is_square_rational(&ratio);
        ratio_checks.push((label.to_string(), ratio, sq));
    }

    Section8Report {
        include_section_in_s,
        e_iv_star_norm,
        iv_star_shape_ok: shape_ok,
        rank_s,
        comp_rank,
        comp_gram,
        comp_signature,
        comp_root_count,
        named_generators_in_comp: named_in_comp,
        named_gram,
        named_span_is_comp,
        ratio_checks,
    }
}
