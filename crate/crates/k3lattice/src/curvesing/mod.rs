//! Exact singularity analysis of plane curves over the rationals: local
//! multiplicities, tangent cones, Fulton intersection numbers, Milnor numbers
//! and ADE labels, plus the catalog of branch sextics for the double planes
//! of discriminant 3, 4 and 7.

mod poly;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub(crate) use poly::{gcd_bivariate, is_squarefree_bivariate, residual_is_spurious, resultant_y, Poly1, Poly2};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    NotHomogeneous { exp: [u32; 3], degree: u32 },
    ZeroPolynomial,
    ZeroCoefficient { exp: [u32; 3] },
    /// The family parameter 0 is excluded (the curve degenerates).
    MuZero,
    ZeroPoint,
    CoincidentPoints,
    NotOnCurve,
    DoesNotVanishAtOrigin,
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::NotHomogeneous { exp, degree } => {
                write!(f, "term x0^{} x1^{} x2^{} does not have degree {degree}", exp[0], exp[1], exp[2])
            }
            CurveError::ZeroPolynomial => write!(f, "zero polynomial"),
            CurveError::ZeroCoefficient { exp } => {
                write!(f, "explicit zero coefficient at x0^{} x1^{} x2^{}", exp[0], exp[1], exp[2])
            }
            CurveError::MuZero => write!(f, "mu = 0 is excluded from the family"),
            CurveError::ZeroPoint => write!(f, "(0:0:0) is not a projective point"),
            CurveError::CoincidentPoints => write!(f, "points must be pairwise distinct"),
            CurveError::NotOnCurve => write!(f, "point does not lie on the curve"),
            CurveError::DoesNotVanishAtOrigin => write!(f, "local curve does not vanish at the origin"),
        }
    }
}

impl std::error::Error for CurveError {}

// ---------------------------------------------------------------------------
// points and curves
// ---------------------------------------------------------------------------

/// A rational projective point, stored in canonical form: scaled so the
/// largest-index nonzero coordinate equals 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [BigRational; 3],
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.coords[0], self.coords[1], self.coords[2])
    }
}

impl ProjPoint {
    pub fn new(coords: [BigRational; 3]) -> Result<Self, CurveError> {
        let chart = (0..3).rev().find(|&i| !coords[i].is_zero()).ok_or(CurveError::ZeroPoint)?;
        let scale = coords[chart].clone();
        let c = [&coords[0] / &scale, &coords[1] / &scale, &coords[2] / &scale];
        Ok(ProjPoint { coords: c })
    }

    pub fn from_ints(coords: [i64; 3]) -> Result<Self, CurveError> {
        Self::new(coords.map(|x| BigRational::from(BigInt::from(x))))
    }

    pub fn coords(&self) -> &[BigRational; 3] {
        &self.coords
    }

    /// Index of the chart containing the point: the largest-index nonzero
    /// coordinate.
    pub fn chart(&self) -> usize {
        (0..3).rev().find(|&i| !self.coords[i].is_zero()).expect("nonzero point")
    }
}

/// A nonzero homogeneous polynomial in `x0, x1, x2` with rational
/// coefficients, interpreted as a plane projective curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousCurve {
    degree: u32,
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl HomogeneousCurve {
    pub fn new(degree: u32, terms: BTreeMap<[u32; 3], BigRational>) -> Result<Self, CurveError> {
        if terms.is_empty() {
            return Err(CurveError::ZeroPolynomial);
        }
        for (e, c) in &terms {
            if e[0] + e[1] + e[2] != degree {
                return Err(CurveError::NotHomogeneous { exp: *e, degree });
            }
            if c.is_zero() {
                return Err(CurveError::ZeroCoefficient { exp: *e });
            }
        }
        Ok(HomogeneousCurve { degree, terms })
    }

    fn from_poly3(p: &Poly3) -> Result<Self, CurveError> {
        let degree = p.terms.keys().map(|e| e[0] + e[1] + e[2]).max().ok_or(CurveError::ZeroPolynomial)?;
        Self::new(degree, p.terms.clone())
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; 3], &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: [u32; 3]) -> BigRational {
        self.terms.get(&exp).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, p: &ProjPoint) -> BigRational {
        let mut acc = BigRational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..3 {
                for _ in 0..e[i] {
                    t *= &p.coords()[i];
                }
            }
            acc += t;
        }
        acc
    }

    pub fn contains(&self, p: &ProjPoint) -> bool {
        self.eval(p).is_zero()
    }

    /// Partial derivative as a raw term map (may be empty).
    pub fn partial(&self, var: usize) -> BTreeMap<[u32; 3], BigRational> {
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            if e[var] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[var] -= 1;
            let v = c * BigRational::from(BigInt::from(e[var]));
            out.insert(e2, v);
        }
        out
    }

    /// Affine model in the chart `x_chart = 1`; the two affine variables are
    /// the remaining coordinates in ascending index order.
    pub fn dehomogenize(&self, chart: usize) -> Poly2 {
        let vars: [usize; 2] = match chart {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        };
        let mut out = Poly2::zero();
        for (e, c) in &self.terms {
            out.add_term((e[vars[0]], e[vars[1]]), c.clone());
        }
        out
    }
}

/// Internal trivariate scratch polynomial used to expand the catalog curves.
#[derive(Debug, Clone)]
struct Poly3 {
    terms: BTreeMap<[u32; 3], BigRational>,
}

impl Poly3 {
    fn zero() -> Self {
        Poly3 { terms: BTreeMap::new() }
    }

    fn term(e: [u32; 3], c: BigRational) -> Self {
        let mut p = Poly3::zero();
        p.add_term(e, c);
        p
    }

    fn var(i: usize) -> Self {
        let mut e = [0u32; 3];
        e[i] = 1;
        Poly3::term(e, BigRational::one())
    }

    fn constant(c: i64) -> Self {
        Poly3::term([0, 0, 0], BigRational::from(BigInt::from(c)))
    }

    fn add_term(&mut self, e: [u32; 3], c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn add(&self, o: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    fn sub(&self, o: &Poly3) -> Poly3 {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }

    fn mul(&self, o: &Poly3) -> Poly3 {
        let mut out = Poly3::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term([e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]], c1 * c2);
            }
        }
        out
    }

    fn scale(&self, c: &BigRational) -> Poly3 {
        let mut out = Poly3::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, v * c);
        }
        out
    }

    fn pow(&self, k: u32) -> Poly3 {
        let mut out = Poly3::constant(1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }
}

/// The named branch sextics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CatalogCurve {
    /// Three lines times a smooth cubic; the branch curve with `NS` overlattice
    /// of `U + E6^3`.
    C3,
    /// Six lines; the branch curve with `NS` overlattice of `U + D6^3`.
    C4,
    /// The irreducible branch sextic of the discriminant-7 surface.
    C7,
    /// The one-parameter family specializing to `C7` at `mu = -4`.
    Dmu(BigRational),
}

pub fn curve_catalog(which: &CatalogCurve) -> Result<HomogeneousCurve, CurveError> {
    let x0 = Poly3::var(0);
    let x1 = Poly3::var(1);
    let x2 = Poly3::var(2);
    // x0^2 x1 + x1^2 x2 + x2^2 x0 - 3 x0 x1 x2
    let cubic = x0
        .mul(&x0)
        .mul(&x1)
        .add(&x1.mul(&x1).mul(&x2))
        .add(&x2.mul(&x2).mul(&x0))
        .sub(&x0.mul(&x1).mul(&x2).mul(&Poly3::constant(3)));
    // (x0 - x1)(x1 - x2)(x2 - x0)
    let diff = x0.sub(&x1).mul(&x1.sub(&x2)).mul(&x2.sub(&x0));
    let triple = x0.mul(&x1).mul(&x2);
    let p = match which {
        CatalogCurve::C3 => {
            let sum3 = x0.add(&x1).add(&x2).pow(3);
            diff.mul(&sum3.add(&diff))
        }
        CatalogCurve::C4 => triple.mul(&diff),
        CatalogCurve::C7 => cubic.mul(&cubic).sub(&triple.mul(&diff).scale(&BigRational::from(BigInt::from(4)))),
        CatalogCurve::Dmu(mu) => {
            if mu.is_zero() {
                return Err(CurveError::MuZero);
            }
            cubic.mul(&cubic).add(&triple.mul(&diff).scale(mu))
        }
    };
    HomogeneousCurve::from_poly3(&p)
}

// ---------------------------------------------------------------------------
// local analysis
// ---------------------------------------------------------------------------

/// A bivariate polynomial understood at the origin of an affine chart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalCurve {
    poly: Poly2,
}

impl LocalCurve {
    /// Build a local curve from `(exponent of x, exponent of y) -> coefficient`
    /// terms; repeated exponents accumulate.
    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), BigRational)>) -> Self {
        LocalCurve { poly: Poly2::from_terms(terms) }
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.poly.constant_term().is_zero()
    }

    pub fn add(&self, other: &LocalCurve) -> LocalCurve {
        LocalCurve { poly: self.poly.add(&other.poly) }
    }

    pub fn mul(&self, other: &LocalCurve) -> LocalCurve {
        LocalCurve { poly: self.poly.mul(&other.poly) }
    }
}

/// Dehomogenize at the chart of `p` (the largest-index nonzero coordinate)
/// and translate `p` to the origin.
pub fn localize(f: &HomogeneousCurve, p: &ProjPoint) -> LocalCurve {
    let chart = p.chart();
    let affine = f.dehomogenize(chart);
    let vars: [usize; 2] = match chart {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let a = p.coords()[vars[0]].clone();
    let b = p.coords()[vars[1]].clone();
    LocalCurve { poly: affine.translate(&a, &b) }
}

/// Multiplicity and tangent-cone factor pattern of a local curve germ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentCone {
    pub multiplicity: u32,
    /// Multiset of multiplicities of the distinct linear factors of the cone
    /// over the algebraic closure, ascending; the entries sum to the
    /// multiplicity.
    pub pattern: Vec<u32>,
}

pub fn multiplicity_and_cone(g: &LocalCurve) -> Result<TangentCone, CurveError> {
    if g.poly.is_zero() {
        return Err(CurveError::ZeroPolynomial);
    }
    if !g.vanishes_at_origin() {
        return Err(CurveError::DoesNotVanishAtOrigin);
    }
    let m = g.poly.min_total_degree().expect("nonzero");
    let cone = g.poly.homogeneous_part(m);
    // roots of the binary form: substitute y = 1, plus the root at y = 0
    // with multiplicity m - deg of the substituted polynomial
    let mut t_coeffs = vec![BigRational::zero(); m as usize + 1];
    for (&(i, _j), c) in cone.terms() {
        t_coeffs[i as usize] += c.clone();
    }
    let t = Poly1::from_coeffs(t_coeffs);
    let d0 = t.degree().unwrap_or(0) as u32;
    let mut pattern = Vec::new();
    if m > d0 {
        pattern.push(m - d0);
    }
    if !t.is_constant() {
        for (factor, mult) in t.squarefree_decomposition() {
            let deg = factor.degree().unwrap_or(0);
            for _ in 0..deg {
                pattern.push(mult as u32);
            }
        }
    }
    pattern.sort();
    debug_assert_eq!(pattern.iter().sum::<u32>(), m);
    Ok(TangentCone { multiplicity: m, pattern })
}

/// Intersection multiplicity values: finite or infinite (shared component).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Mult {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Mult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mult::Finite(n) => write!(f, "{n}"),
            Mult::Infinite => write!(f, "inf"),
        }
    }
}

impl Mult {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Mult::Finite(n) => Some(*n),
            Mult::Infinite => None,
        }
    }

}

/// Intersection multiplicity of two local curves at the origin, by the
/// standard recursion on restrictions to `y = 0`. Satisfies the intersection
/// number axioms: symmetry, `I(x, y) = 1`, additivity over products,
/// invariance under `h -> h + a·g`, and infinity exactly on shared
/// components through the origin.
pub fn intersection_multiplicity(g: &LocalCurve, h: &LocalCurve) -> Mult {
    imult(&g.poly, &h.poly)
}

fn imult(p: &Poly2, q: &Poly2) -> Mult {
    // a common component through the origin means infinite multiplicity; the
    // reduction loop below would otherwise accumulate forever
    if !p.is_zero() && !q.is_zero() {
        let common = gcd_bivariate(p, q);
        if common.max_total_degree() > Some(0) && common.constant_term().is_zero() {
            return Mult::Infinite;
        }
    }
    let mut p = p.normalize_content();
    let mut q = q.normalize_content();
    let mut acc: u64 = 0;
    loop {
        if p.is_zero() {
            return if q.constant_term().is_zero() {
                Mult::Infinite
            } else {
                Mult::Finite(acc)
            };
        }
        if q.is_zero() {
            return if p.constant_term().is_zero() {
                Mult::Infinite
            } else {
                Mult::Finite(acc)
            };
        }
        if !p.constant_term().is_zero() || !q.constant_term().is_zero() {
            return Mult::Finite(acc);
        }
        let f = p.at_y_zero();
        let g = q.at_y_zero();
        match (f.is_zero(), g.is_zero()) {
            (true, true) => return Mult::Infinite, // y divides both
            (true, false) => {
                // p = y^a · p1 with y not dividing p1; I(y, q) = ord_0 q(x, 0)
                let a = p.y_order() as u64;
                let o = g.ord_at_zero().expect("nonzero") as u64;
                acc += a * o;
                p = p.div_y_power(p.y_order());
            }
            (false, true) => std::mem::swap(&mut p, &mut q),
            (false, false) => {
                let dp = f.degree().expect("nonzero");
                let dq = g.degree().expect("nonzero");
                if dp > dq {
                    std::mem::swap(&mut p, &mut q);
                    continue;
                }
                // cancel the leading coefficient of the restriction of q;
                // renormalizing the content keeps coefficients small, and is
                // harmless since constants have multiplicity zero
                let c = g.leading().unwrap() / f.leading().unwrap();
                let shift = Poly2::from_terms([(((dq - dp) as u32, 0), c)]);
                q = q.sub(&shift.mul(&p)).normalize_content();
            }
        }
    }
}

/// Classification labels for plane-curve germs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SingLabel {
    Smooth,
    A(u64),
    D(u64),
    E(u64),
    Unclassified,
}

impl fmt::Display for SingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SingLabel::Smooth => write!(f, "smooth"),
            SingLabel::A(n) => write!(f, "A{n}"),
            SingLabel::D(n) => write!(f, "D{n}"),
            SingLabel::E(n) => write!(f, "E{n}"),
            SingLabel::Unclassified => write!(f, "unclassified"),
        }
    }
}

/// Local data of a germ: multiplicity, Milnor number, cone pattern, label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GermReport {
    pub multiplicity: u32,
    pub milnor: Mult,
    pub pattern: Vec<u32>,
    pub label: SingLabel,
}

/// Milnor number (the intersection multiplicity of the two partials at the
/// origin) and the ADE label read off from `(m, mu, cone pattern)`:
/// `A_n: m = 2, mu = n`; `D_n: m = 3, mu = n, cone not a perfect cube`;
/// `E_{6,7,8}: m = 3, cone a perfect cube, mu = 6, 7, 8`. Anything else is
/// reported as unclassified, never silently mislabeled.
pub fn milnor_and_classify(g: &LocalCurve) -> Result<GermReport, CurveError> {
    let cone = multiplicity_and_cone(g)?;
    let gx = LocalCurve { poly: g.poly.deriv_x() };
    let gy = LocalCurve { poly: g.poly.deriv_y() };
    let milnor = intersection_multiplicity(&gx, &gy);
    let m = cone.multiplicity;
    let cube = cone.pattern == [3];
    let label = match (m, milnor) {
        (1, _) => SingLabel::Smooth,
        (_, Mult::Infinite) => SingLabel::Unclassified,
        (2, Mult::Finite(mu)) if mu >= 1 => SingLabel::A(mu),
        (3, Mult::Finite(mu)) if !cube && mu >= 4 => SingLabel::D(mu),
        (3, Mult::Finite(mu)) if cube && (6..=8).contains(&mu) => SingLabel::E(mu),
        _ => SingLabel::Unclassified,
    };
    Ok(GermReport { multiplicity: m, milnor, pattern: cone.pattern, label })
}

/// Full per-point report for a point on the curve.
#[derive(Debug, Clone)]
pub struct SingularityReport {
    pub point: ProjPoint,
    pub multiplicity: u32,
    pub milnor: Mult,
    pub pattern: Vec<u32>,
    pub label: SingLabel,
}

pub fn classify_at(f: &HomogeneousCurve, p: &ProjPoint) -> Result<SingularityReport, CurveError> {
    if !f.contains(p) {
        return Err(CurveError::NotOnCurve);
    }
    let germ = milnor_and_classify(&localize(f, p))?;
    Ok(SingularityReport {
        point: p.clone(),
        multiplicity: germ.multiplicity,
        milnor: germ.milnor,
        pattern: germ.pattern,
        label: germ.label,
    })
}

/// Order of vanishing at `p` of `f` restricted to the line through `p` and
/// `q`, parametrized with parameter 0 at `p`; infinite when the line is a
/// component of the curve.
pub fn line_intersection_multiplicity(
    f: &HomogeneousCurve,
    p: &ProjPoint,
    q: &ProjPoint,
) -> Result<Mult, CurveError> {
    if p == q {
        return Err(CurveError::CoincidentPoints);
    }
    // restrict to t -> p + t q
    let mut total = Poly1::zero();
    for (e, c) in f.terms() {
        let mut term = Poly1::constant(c.clone());
        for i in 0..3 {
            let lin = Poly1::from_coeffs(vec![p.coords()[i].clone(), q.coords()[i].clone()]);
            for _ in 0..e[i] {
                term = term.mul(&lin);
            }
        }
        total = total.add(&term);
    }
    if total.is_zero() {
        return Ok(Mult::Infinite);
    }
    Ok(Mult::Finite(total.ord_at_zero().map_or(0, |o| o as u64)))
}

// ---------------------------------------------------------------------------
// global singular-support verification
// ---------------------------------------------------------------------------

/// Outcome of [`singular_support_check`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupportVerdict {
    /// Every singular point is declared and every declared point is singular.
    Verified,
    /// The curve has a repeated component; the analysis does not apply.
    NonReduced,
    /// A residual factor witnesses (possible) singular points with
    /// non-rational coordinates; honesty forbids a smoothness claim.
    UnverifiedResidual { details: String },
    /// A definite discrepancy: an undeclared rational singular point, or a
    /// declared point that is not a singular point of the curve.
    Failed { reason: String },
}

impl fmt::Display for SupportVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SupportVerdict::Verified => write!(f, "verified"),
            SupportVerdict::NonReduced => write!(f, "non-reduced"),
            SupportVerdict::UnverifiedResidual { details } => {
                write!(f, "unverified residual: {details}")
            }
            SupportVerdict::Failed { reason } => write!(f, "failed: {reason}"),
        }
    }
}

/// Verify that the declared points are exactly the singular points of the
/// curve. Works chart by chart: candidate coordinates come from the gcd of
/// the nonzero pairwise resultants of `{f, f_x, f_y}`; rational candidates
/// are decided exactly; non-rational residual factors are ruled out by gcd
/// computations over the corresponding extension fields, and reported
/// honestly when they cannot be ruled out.
pub fn singular_support_check(f: &HomogeneousCurve, declared: &[ProjPoint]) -> SupportVerdict {
    // reducedness in every chart
    for chart in 0..3 {
        let fc = f.dehomogenize(chart);
        if fc.max_total_degree() == Some(0) {
            continue;
        }
        if !is_squarefree_bivariate(&fc) {
            return SupportVerdict::NonReduced;
        }
    }
    let declared_set: BTreeSet<ProjPoint> = declared.iter().cloned().collect();
    let mut found: BTreeSet<ProjPoint> = BTreeSet::new();
    let mut residuals: Vec<String> = Vec::new();

    for chart in 0..3 {
        let fc = f.dehomogenize(chart);
        if fc.max_total_degree() == Some(0) {
            continue;
        }
        let fx = fc.deriv_x();
        let fy = fc.deriv_y();
        if fc.degree_y().unwrap_or(0) == 0 {
            // the chart sees only vertical lines; squarefree means smooth here
            continue;
        }
        let system: [&Poly2; 3] = [&fc, &fx, &fy];
        let mut r1 = Poly1::zero();
        for (a, b) in [(&fc, &fx), (&fc, &fy), (&fx, &fy)] {
            let res = resultant_y(a, b);
            if !res.is_zero() {
                r1 = r1.gcd(&res);
            }
        }
        if r1.is_zero() {
            // all three resultants vanish identically: impossible for a
            // squarefree curve, but refuse to claim smoothness
            return SupportVerdict::UnverifiedResidual {
                details: format!("all resultants vanish in chart {chart}"),
            };
        }
        if r1.is_constant() {
            continue;
        }
        let (roots, residual) = r1.rational_roots();
        for (x0, _) in roots {
            // y-locus over x = x0: common roots of the nonzero specializations
            let mut g = Poly1::zero();
            for p in system {
                let spec = p.eval_x(&x0);
                if !spec.is_zero() {
                    g = g.gcd(&spec);
                }
            }
            if g.is_zero() {
                return SupportVerdict::UnverifiedResidual {
                    details: format!("whole line x = {x0} degenerates in chart {chart}"),
                };
            }
            if g.is_constant() {
                continue; // spurious resultant root
            }
            let (yroots, yresidual) = g.rational_roots();
            for (y0, _) in yroots {
                let pt = chart_point(chart, &x0, &y0);
                found.insert(pt);
            }
            if !yresidual.is_constant() {
                residuals.push(format!(
                    "chart {chart}, x = {x0}: singular ordinates satisfy {}",
                    describe_poly(&yresidual)
                ));
            }
        }
        if !residual.is_constant() && !residual_is_spurious(&residual, &[&fc, &fx, &fy]) {
            residuals.push(format!(
                "chart {chart}: singular abscissae satisfy {}",
                describe_poly(&residual)
            ));
        }
    }

    // every found point must be declared
    for p in &found {
        if !declared_set.contains(p) {
            return SupportVerdict::Failed { reason: format!("undeclared singular point {p}") };
        }
    }
    // every declared point must be an actual singular point; the Milnor
    // numbers of a reduced curve also satisfy the global bound sum <= (d-1)^2
    let mut milnor_sum: u64 = 0;
    for p in declared {
        if !f.contains(p) {
            return SupportVerdict::Failed { reason: format!("declared point {p} is not on the curve") };
        }
        match milnor_and_classify(&localize(f, p)) {
            Ok(report) => match report.milnor {
                Mult::Finite(mu) if mu >= 1 => milnor_sum += mu,
                Mult::Finite(_) => {
                    return SupportVerdict::Failed {
                        reason: format!("declared point {p} is a smooth point"),
                    }
                }
                Mult::Infinite => {
                    return SupportVerdict::Failed {
                        reason: format!("declared point {p} has infinite Milnor number"),
                    }
                }
            },
            Err(e) => return SupportVerdict::Failed { reason: format!("at {p}: {e}") },
        }
    }
    let degree = f.degree() as u64;
    if milnor_sum > (degree - 1) * (degree - 1) {
        return SupportVerdict::Failed {
            reason: format!(
                "Milnor numbers sum to {milnor_sum} > ({degree}-1)^2; the curve cannot be reduced"
            ),
        };
    }
    if !residuals.is_empty() {
        return SupportVerdict::UnverifiedResidual { details: residuals.join("; ") };
    }
    SupportVerdict::Verified
}

fn chart_point(chart: usize, x: &BigRational, y: &BigRational) -> ProjPoint {
    let one = BigRational::one();
    let coords = match chart {
        0 => [one, x.clone(), y.clone()],
        1 => [x.clone(), one, y.clone()],
        _ => [x.clone(), y.clone(), one],
    };
    ProjPoint::new(coords).expect("chart coordinate is 1")
}

fn describe_poly(p: &Poly1) -> String {
    let d = p.degree().unwrap_or(0);
    let coeffs: Vec<String> = (0..=d).map(|i| p.coeff(i).to_string()).collect();
    format!("poly of degree {d} with coefficients [{}] (no rational roots)", coeffs.join(", "))
}

// ---------------------------------------------------------------------------
// the family conditions
// ---------------------------------------------------------------------------

/// Per-condition outcome of [`check_conditions`].
#[derive(Debug, Clone)]
pub struct ConditionsReport {
    /// (i): no three of the four points are collinear.
    pub general_position: bool,
    /// (ii) data: label at `q`, labels at the `p_i`, support verdict.
    pub label_at_q: SingLabel,
    pub labels_at_p: Vec<SingLabel>,
    pub support: SupportVerdict,
    /// (iii) data: `I(C, l_i)` at each `p_i` and at `q`.
    pub line_mult_at_p: Vec<Mult>,
    pub line_mult_at_q: Vec<Mult>,
    pub condition_i: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
}

impl ConditionsReport {
    pub fn passes(&self) -> bool {
        self.condition_i && self.condition_ii && self.condition_iii
    }
}

/// Check the three defining conditions of the family: (i) the four points are
/// in general position, (ii) the curve has a D4 at `q`, an A3 at each `p_i`
/// and is smooth elsewhere, (iii) the line through `p_i` and `q` meets the
/// curve with multiplicity 2 at `p_i` and 4 at `q`.
pub fn check_conditions(
    f: &HomogeneousCurve,
    p: &[ProjPoint; 3],
    q: &ProjPoint,
) -> Result<ConditionsReport, CurveError> {
    let mut all: Vec<&ProjPoint> = vec![&p[0], &p[1], &p[2], q];
    all.dedup();
    for i in 0..all.len() {
        for j in (i + 1)..all.len() {
            if all[i] == all[j] {
                return Err(CurveError::CoincidentPoints);
            }
        }
    }
    // (i) no three collinear: all 3x3 determinants of coordinate triples nonzero
    let mut general_position = true;
    let pts = [&p[0], &p[1], &p[2], q];
    for skip in 0..4 {
        let tri: Vec<&ProjPoint> = (0..4).filter(|&i| i != skip).map(|i| pts[i]).collect();
        let det = det3(tri[0], tri[1], tri[2]);
        if det.is_zero() {
            general_position = false;
        }
    }
    // (ii)
    let label_at_q =
        if f.contains(q) { classify_at(f, q)?.label } else { SingLabel::Smooth };
    let mut labels_at_p = Vec::new();
    for pi in p {
        labels_at_p.push(if f.contains(pi) { classify_at(f, pi)?.label } else { SingLabel::Smooth });
    }
    let declared: Vec<ProjPoint> = vec![p[0].clone(), p[1].clone(), p[2].clone(), q.clone()];
    let support = singular_support_check(f, &declared);
    let condition_ii = label_at_q == SingLabel::D(4)
        && labels_at_p.iter().all(|l| *l == SingLabel::A(3))
        && support == SupportVerdict::Verified;
    // (iii)
    let mut line_mult_at_p = Vec::new();
    let mut line_mult_at_q = Vec::new();
    for pi in p {
        line_mult_at_p.push(line_intersection_multiplicity(f, pi, q)?);
        line_mult_at_q.push(line_intersection_multiplicity(f, q, pi)?);
    }
    let condition_iii = line_mult_at_p.iter().all(|m| *m == Mult::Finite(2))
        && line_mult_at_q.iter().all(|m| *m == Mult::Finite(4));
    Ok(ConditionsReport {
        general_position,
        label_at_q,
        labels_at_p,
        support,
        line_mult_at_p,
        line_mult_at_q,
        condition_i: general_position,
        condition_ii,
        condition_iii,
    })
}

fn det3(a: &ProjPoint, b: &ProjPoint, c: &ProjPoint) -> BigRational {
    let m = [a.coords(), b.coords(), c.coords()];
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
        - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn br(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn pt(x: i64, y: i64, z: i64) -> ProjPoint {
        ProjPoint::from_ints([x, y, z]).unwrap()
    }

    #[test]
    fn catalog_curves_are_sextics() {
        for c in [
            CatalogCurve::C3,
            CatalogCurve::C4,
            CatalogCurve::C7,
            CatalogCurve::Dmu(br(1, 1)),
            CatalogCurve::Dmu(br(-4, 1)),
        ] {
            let f = curve_catalog(&c).unwrap();
            assert_eq!(f.degree(), 6, "{c:?}");
        }
        assert!(matches!(curve_catalog(&CatalogCurve::Dmu(br(0, 1))), Err(CurveError::MuZero)));
    }

    #[test]
    fn c7_coefficient_spot_check() {
        // the x0^4 x1^2 coefficient comes only from squaring x0^2 x1
        let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
        assert_eq!(c7.coefficient([4, 2, 0]), br(1, 1));
    }

    #[test]
    fn d_minus_4_equals_c7() {
        let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
        let d = curve_catalog(&CatalogCurve::Dmu(br(-4, 1))).unwrap();
        assert_eq!(c7, d);
    }

    #[test]
    fn c4_is_a_product_of_six_lines() {
        // spot check: vanishes identically on x0 = 0 and on x0 = x1
        let c4 = curve_catalog(&CatalogCurve::C4).unwrap();
        assert!(c4.contains(&pt(0, 1, 5)));
        assert!(c4.contains(&pt(3, 3, 7)));
        assert_eq!(
            line_intersection_multiplicity(&c4, &pt(0, 1, 0), &pt(0, 0, 1)).unwrap(),
            Mult::Infinite
        );
    }

    #[test]
    fn localize_simple_cases() {
        // x0 x1 at (0:0:1) -> xy
        let f = HomogeneousCurve::new(
            2,
            BTreeMap::from([([1, 1, 0], br(1, 1))]),
        )
        .unwrap();
        let local = localize(&f, &pt(0, 0, 1));
        assert_eq!(local.poly, Poly2::from_terms([((1, 1), br(1, 1))]));
        assert!(local.vanishes_at_origin());
        // a point off the curve has a nonzero constant term
        let off = localize(&f, &pt(1, 1, 1));
        assert!(!off.vanishes_at_origin());
    }

    #[test]
    fn c7_local_structure_at_triple_point() {
        let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
        let local = localize(&c7, &pt(1, 1, 1));
        let cone = multiplicity_and_cone(&local).unwrap();
        assert_eq!(cone.multiplicity, 3);
        assert_eq!(cone.pattern, vec![1, 1, 1]);
    }

    #[test]
    fn cusp_normal_form() {
        // y^2 - x^3
        let g = LocalCurve { poly: Poly2::from_terms([
            ((0, 2), br(1, 1)),
            ((3, 0), br(-1, 1)),
        ]) };
        let cone = multiplicity_and_cone(&g).unwrap();
        assert_eq!((cone.multiplicity, cone.pattern.clone()), (2, vec![2]));
        let rep = milnor_and_classify(&g).unwrap();
        assert_eq!(rep.milnor, Mult::Finite(2));
        assert_eq!(rep.label, SingLabel::A(2));
    }

    #[test]
    fn fulton_trivial_axioms() {
        let x = LocalCurve { poly: Poly2::from_terms([((1, 0), br(1, 1))]) };
        let y = LocalCurve { poly: Poly2::from_terms([((0, 1), br(1, 1))]) };
        assert_eq!(intersection_multiplicity(&y, &x), Mult::Finite(1));
        // I(y, y - x^2) = 2
        let parab = LocalCurve { poly: Poly2::from_terms([
            ((0, 1), br(1, 1)),
            ((2, 0), br(-1, 1)),
        ]) };
        assert_eq!(intersection_multiplicity(&y, &parab), Mult::Finite(2));
        // I(y^2 - x^3, y) = 3
        let cusp = LocalCurve { poly: Poly2::from_terms([
            ((0, 2), br(1, 1)),
            ((3, 0), br(-1, 1)),
        ]) };
        assert_eq!(intersection_multiplicity(&cusp, &y), Mult::Finite(3));
        // shared component
        assert_eq!(intersection_multiplicity(&y, &y), Mult::Infinite);
        // off-origin
        let unit = LocalCurve { poly: Poly2::from_terms([((0, 0), br(1, 1)), ((1, 0), br(1, 1))]) };
        assert_eq!(intersection_multiplicity(&unit, &y), Mult::Finite(0));
    }

    #[test]
    fn milnor_of_standard_germs() {
        // node xy: A1
        let node = LocalCurve { poly: Poly2::from_terms([((1, 1), br(1, 1))]) };
        let rep = milnor_and_classify(&node).unwrap();
        assert_eq!((rep.multiplicity, rep.milnor, rep.label), (2, Mult::Finite(1), SingLabel::A(1)));
        // ordinary triple point x^3 - xy^2 = x(x-y)(x+y): D4
        let tri = LocalCurve { poly: Poly2::from_terms([
            ((3, 0), br(1, 1)),
            ((1, 2), br(-1, 1)),
        ]) };
        let rep = milnor_and_classify(&tri).unwrap();
        assert_eq!((rep.multiplicity, rep.milnor, rep.label), (3, Mult::Finite(4), SingLabel::D(4)));
        // E6: x^3 + y^4
        let e6 = LocalCurve { poly: Poly2::from_terms([
            ((3, 0), br(1, 1)),
            ((0, 4), br(1, 1)),
        ]) };
        let rep = milnor_and_classify(&e6).unwrap();
        assert_eq!((rep.milnor, rep.label), (Mult::Finite(6), SingLabel::E(6)));
        // E7: x^3 + x y^3
        let e7 = LocalCurve { poly: Poly2::from_terms([
            ((3, 0), br(1, 1)),
            ((1, 3), br(1, 1)),
        ]) };
        let rep = milnor_and_classify(&e7).unwrap();
        assert_eq!((rep.milnor, rep.label), (Mult::Finite(7), SingLabel::E(7)));
        // E8: x^3 + y^5
        let e8 = LocalCurve { poly: Poly2::from_terms([
            ((3, 0), br(1, 1)),
            ((0, 5), br(1, 1)),
        ]) };
        let rep = milnor_and_classify(&e8).unwrap();
        assert_eq!((rep.milnor, rep.label), (Mult::Finite(8), SingLabel::E(8)));
        // D5: x(y^2 - x^3)... use x y^2 - x^4 -> mu = 5
        let d5 = LocalCurve { poly: Poly2::from_terms([
            ((1, 2), br(1, 1)),
            ((4, 0), br(-1, 1)),
        ]) };
        let rep = milnor_and_classify(&d5).unwrap();
        assert_eq!((rep.milnor, rep.label), (Mult::Finite(5), SingLabel::D(5)));
        // non-reduced germ: x^2
        let fat = LocalCurve { poly: Poly2::from_terms([((2, 0), br(1, 1))]) };
        let rep = milnor_and_classify(&fat).unwrap();
        assert_eq!((rep.milnor, rep.label), (Mult::Infinite, SingLabel::Unclassified));
    }

    #[test]
    fn c7_singularities() {
        let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
        let rep = classify_at(&c7, &pt(1, 1, 1)).unwrap();
        assert_eq!(rep.label, SingLabel::D(4));
        for vertex in [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)] {
            let rep = classify_at(&c7, &vertex).unwrap();
            assert_eq!(rep.label, SingLabel::A(4), "at {vertex}");
        }
    }

    #[test]
    fn c3_singularities() {
        let c3 = curve_catalog(&CatalogCurve::C3).unwrap();
        assert_eq!(classify_at(&c3, &pt(1, 1, 1)).unwrap().label, SingLabel::D(4));
        for p in [pt(1, 1, -2), pt(-2, 1, 1), pt(1, -2, 1)] {
            assert_eq!(classify_at(&c3, &p).unwrap().label, SingLabel::A(5), "at {p}");
        }
    }

    #[test]
    fn c4_singularities() {
        let c4 = curve_catalog(&CatalogCurve::C4).unwrap();
        for p in [pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)] {
            assert_eq!(classify_at(&c4, &p).unwrap().label, SingLabel::D(4), "at {p}");
        }
        // the three extra nodes where only two of the six lines meet
        for p in [pt(0, 1, 1), pt(1, 0, 1), pt(1, 1, 0)] {
            assert_eq!(classify_at(&c4, &p).unwrap().label, SingLabel::A(1), "at {p}");
        }
    }

    #[test]
    fn c4_six_lines_all_divide() {
        let c4 = curve_catalog(&CatalogCurve::C4).unwrap();
        // two distinct points on each of the six lines
        let lines: [(ProjPoint, ProjPoint); 6] = [
            (pt(0, 1, 0), pt(0, 0, 1)),   // x0 = 0
            (pt(1, 0, 0), pt(0, 0, 1)),   // x1 = 0
            (pt(1, 0, 0), pt(0, 1, 0)),   // x2 = 0
            (pt(1, 1, 0), pt(0, 0, 1)),   // x0 = x1
            (pt(0, 1, 1), pt(1, 0, 0)),   // x1 = x2
            (pt(1, 0, 1), pt(0, 1, 0)),   // x2 = x0
        ];
        for (p, q) in lines {
            assert_eq!(
                line_intersection_multiplicity(&c4, &p, &q).unwrap(),
                Mult::Infinite,
                "line through {p} and {q} should divide the sextic"
            );
        }
    }

    #[test]
    fn line_multiplicities_of_the_family() {
        let d1 = curve_catalog(&CatalogCurve::Dmu(br(1, 1))).unwrap();
        let q = pt(1, 1, 1);
        let p1 = pt(1, 0, 0);
        assert_eq!(line_intersection_multiplicity(&d1, &q, &p1).unwrap(), Mult::Finite(4));
        assert_eq!(line_intersection_multiplicity(&d1, &p1, &q).unwrap(), Mult::Finite(2));
        assert!(line_intersection_multiplicity(&d1, &q, &q).is_err());
    }

    #[test]
    fn support_check_c7() {
        let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
        let declared = vec![pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        assert_eq!(singular_support_check(&c7, &declared), SupportVerdict::Verified);
        // dropping a point is a hard failure
        let missing = vec![pt(1, 1, 1), pt(1, 0, 0), pt(0, 1, 0)];
        assert!(matches!(
            singular_support_check(&c7, &missing),
            SupportVerdict::Failed { .. }
        ));
        // declaring a smooth point is a hard failure
        let mut extra = declared.clone();
        extra.push(pt(1, 1, 0));
        assert!(matches!(singular_support_check(&c7, &extra), SupportVerdict::Failed { .. }));
    }

    #[test]
    fn support_check_smooth_fermat() {
        let fermat = HomogeneousCurve::new(
            6,
            BTreeMap::from([
                ([6, 0, 0], br(1, 1)),
                ([0, 6, 0], br(1, 1)),
                ([0, 0, 6], br(1, 1)),
            ]),
        )
        .unwrap();
        assert_eq!(singular_support_check(&fermat, &[]), SupportVerdict::Verified);
    }

    #[test]
    fn support_check_non_reduced() {
        // (x0 x1)^2 x2^2 is non-reduced
        let f = HomogeneousCurve::new(6, BTreeMap::from([([2, 2, 2], br(1, 1))])).unwrap();
        assert_eq!(singular_support_check(&f, &[]), SupportVerdict::NonReduced);
    }

    #[test]
    fn conditions_for_the_family() {
        let p = [pt(1, 0, 0), pt(0, 1, 0), pt(0, 0, 1)];
        let q = pt(1, 1, 1);
        let d1 = curve_catalog(&CatalogCurve::Dmu(br(1, 1))).unwrap();
        let rep = check_conditions(&d1, &p, &q).unwrap();
        assert!(rep.condition_i && rep.condition_ii && rep.condition_iii, "{rep:?}");
        assert!(rep.passes());

        // mu = -4 is C7: fails precisely because the p_i are A4, not A3
        let c7 = curve_catalog(&CatalogCurve::Dmu(br(-4, 1))).unwrap();
        let rep = check_conditions(&c7, &p, &q).unwrap();
        assert!(rep.condition_i);
        assert!(!rep.condition_ii);
        assert!(rep.labels_at_p.iter().all(|l| *l == SingLabel::A(4)));
        assert_eq!(rep.label_at_q, SingLabel::D(4));
        assert_eq!(rep.support, SupportVerdict::Verified);
        assert!(!rep.passes());
    }

    #[test]
    fn euler_relation_for_catalog_curves() {
        for c in [CatalogCurve::C3, CatalogCurve::C4, CatalogCurve::C7, CatalogCurve::Dmu(br(2, 1))] {
            let f = curve_catalog(&c).unwrap();
            // x0 f_0 + x1 f_1 + x2 f_2 = 6 f
            let mut acc: BTreeMap<[u32; 3], BigRational> = BTreeMap::new();
            for var in 0..3 {
                for (e, coeff) in f.partial(var) {
                    let mut e2 = e;
                    e2[var] += 1;
                    *acc.entry(e2).or_insert_with(BigRational::zero) += coeff;
                }
            }
            acc.retain(|_, v| !v.is_zero());
            let expected: BTreeMap<[u32; 3], BigRational> =
                f.terms().map(|(e, c)| (*e, c * br(6, 1))).collect();
            assert_eq!(acc, expected, "{c:?}");
        }
    }

    #[test]
    fn chart_independence_of_reports() {
        // (1,1,1) is visible in all three charts; force each chart by hand
        let c7 = curve_catalog(&CatalogCurve::C7).unwrap();
        for chart in 0..3 {
            let affine = c7.dehomogenize(chart);
            let local = LocalCurve { poly: affine.translate(&br(1, 1), &br(1, 1)) };
            let rep = milnor_and_classify(&local).unwrap();
            assert_eq!(rep.label, SingLabel::D(4), "chart {chart}");
            assert_eq!(rep.milnor, Mult::Finite(4));
        }
    }
}
