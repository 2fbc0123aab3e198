//! Discriminant groups `A_L = L*/L` of even lattices, their finite quadratic
//! forms `q_L`, isomorphism testing, gluing over unimodular ambients and even
//! overlattices from isotropic subgroups.
//!
//! Canonical residue representatives: `q`-values live in `[0, 2)`, pairings
//! in `[0, 1)`; all comparisons are exact on these representatives.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exactmat::{
    column_span_basis, rational_inverse, rational_solve, snf, IntMatrix, RatMatrix,
};
use crate::lattice::{Embedding, Lattice, LatticeError};

/// Groups larger than this are rejected by the exhaustive isomorphism search.
pub const DEFAULT_ISO_BOUND: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DiscFormError {
    OddLattice,
    Degenerate,
    SizeBoundExceeded { size: BigInt, bound: u64 },
    NotUnimodularAmbient,
    NotEvenAmbient,
    NotPrimitiveSublattice,
    NotIsotropic { generator: usize },
    PairingNotIntegral { gen_a: usize, gen_b: usize },
    /// Internal consistency failure; indicates a bug, not bad input.
    Internal(String),
    Lattice(LatticeError),
}

impl fmt::Display for DiscFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiscFormError::OddLattice => write!(f, "lattice is not even"),
            DiscFormError::Degenerate => write!(f, "lattice is degenerate"),
            DiscFormError::SizeBoundExceeded { size, bound } => {
                write!(f, "discriminant group of order {size} exceeds the search bound {bound}")
            }
            DiscFormError::NotUnimodularAmbient => write!(f, "non-unimodular ambient"),
            DiscFormError::NotEvenAmbient => write!(f, "ambient lattice is not even"),
            DiscFormError::NotPrimitiveSublattice => write!(f, "sublattice is not primitive"),
            DiscFormError::NotIsotropic { generator } => {
                write!(f, "generator {generator} is not isotropic")
            }
            DiscFormError::PairingNotIntegral { gen_a, gen_b } => {
                write!(f, "generators {gen_a},{gen_b} have non-integral pairing")
            }
            DiscFormError::Internal(s) => write!(f, "internal invariant violated: {s}"),
            DiscFormError::Lattice(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for DiscFormError {}

impl From<LatticeError> for DiscFormError {
    fn from(e: LatticeError) -> Self {
        DiscFormError::Lattice(e)
    }
}

pub(crate) fn mod2(x: &BigRational) -> BigRational {
    let two = BigRational::from(BigInt::from(2));
    let mut r = x % &two;
    if r.is_negative() {
        r += &two;
    }
    r
}

pub(crate) fn mod1(x: &BigRational) -> BigRational {
    let one = BigRational::one();
    let mut r = x % &one;
    if r.is_negative() {
        r += &one;
    }
    r
}

/// A finite quadratic form on `⊕ ℤ/d_i` with `d_1 | d_2 | ...` (all > 1):
/// `q` with values in `ℚ/2ℤ` and its polarization `b` in `ℚ/ℤ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteQuadraticForm {
    orders: Vec<BigInt>,
    q: Vec<BigRational>,
    b: Vec<Vec<BigRational>>,
    generator_lift: Option<RatMatrix>,
    source: Option<DiscSource>,
}

/// Data tying a form back to the lattice it came from, used by the gluing map
/// to send dual vectors to discriminant classes.
#[derive(Debug, Clone, PartialEq, Eq)]
struct DiscSource {
    gram: IntMatrix,
    left: IntMatrix,
    diag: Vec<BigInt>,
    kept: Vec<usize>,
}

impl FiniteQuadraticForm {
    pub fn trivial() -> Self {
        FiniteQuadraticForm {
            orders: vec![],
            q: vec![],
            b: vec![],
            generator_lift: None,
            source: None,
        }
    }

    /// Assemble a form from explicit data (orders need not be > 1 or form a
    /// chain: the presentation is renormalized).
    pub fn from_parts(
        orders: Vec<BigInt>,
        q: Vec<BigRational>,
        b: Vec<Vec<BigRational>>,
    ) -> Result<Self, DiscFormError> {
        if q.len() != orders.len()
            || b.len() != orders.len()
            || b.iter().any(|r| r.len() != orders.len())
        {
            return Err(DiscFormError::Internal("ragged form data".into()));
        }
        let raw = FiniteQuadraticForm {
            orders,
            q: q.iter().map(mod2).collect(),
            b: b.iter().map(|row| row.iter().map(mod1).collect()).collect(),
            generator_lift: None,
            source: None,
        };
        raw.renormalize()
    }

    pub fn orders(&self) -> &[BigInt] {
        &self.orders
    }

    /// Number of generators = minimal number of generators of `A_L`.
    pub fn length(&self) -> usize {
        self.orders.len()
    }

    /// `|A_L|`.
    pub fn group_order(&self) -> BigInt {
        self.orders.iter().product()
    }

    pub fn q_values(&self) -> &[BigRational] {
        &self.q
    }

    pub fn pairings(&self) -> &[Vec<BigRational>] {
        &self.b
    }

    /// Dual-vector coordinates of the generators in the source lattice basis.
    pub fn generator_lift(&self) -> Option<&RatMatrix> {
        self.generator_lift.as_ref()
    }

    pub fn is_trivial(&self) -> bool {
        self.orders.is_empty()
    }

    fn reduce_coords(&self, elt: &[BigInt]) -> Vec<BigInt> {
        elt.iter().zip(&self.orders).map(|(a, d)| a.mod_floor(d)).collect()
    }

    /// `q` of an arbitrary element, from the generator values by polarization.
    pub fn q_of(&self, elt: &[BigInt]) -> BigRational {
        assert_eq!(elt.len(), self.length());
        let a = self.reduce_coords(elt);
        let mut acc = BigRational::zero();
        for i in 0..a.len() {
            let ai = BigRational::from(a[i].clone());
            acc += &ai * &ai * &self.q[i];
            for j in (i + 1)..a.len() {
                let aj = BigRational::from(a[j].clone());
                acc += BigRational::from(BigInt::from(2)) * &ai * &aj * &self.b[i][j];
            }
        }
        mod2(&acc)
    }

    pub fn pairing_of(&self, x: &[BigInt], y: &[BigInt]) -> BigRational {
        assert_eq!(x.len(), self.length());
        assert_eq!(y.len(), self.length());
        let x = self.reduce_coords(x);
        let y = self.reduce_coords(y);
        let mut acc = BigRational::zero();
        for i in 0..x.len() {
            for j in 0..y.len() {
                acc += BigRational::from(&x[i] * &y[j]) * &self.b[i][j];
            }
        }
        mod1(&acc)
    }

    pub fn element_order(&self, elt: &[BigInt]) -> BigInt {
        let a = self.reduce_coords(elt);
        let mut ord = BigInt::one();
        for (ai, d) in a.iter().zip(&self.orders) {
            let o = d / ai.gcd(d);
            ord = ord.lcm(&o);
        }
        ord
    }

    /// All elements as coordinate tuples, in lexicographic order.
    pub fn elements(&self) -> Vec<Vec<BigInt>> {
        let mut out = vec![vec![]];
        for d in &self.orders {
            let mut next = Vec::new();
            for prefix in &out {
                let mut i = BigInt::zero();
                while &i < d {
                    let mut v = prefix.clone();
                    v.push(i.clone());
                    next.push(v);
                    i += 1;
                }
            }
            out = next;
        }
        out
    }

    /// Value-wise negation: `q ↦ -q`, `b ↦ -b`.
    pub fn negate(&self) -> Self {
        FiniteQuadraticForm {
            orders: self.orders.clone(),
            q: self.q.iter().map(|x| mod2(&-x)).collect(),
            b: self.b.iter().map(|row| row.iter().map(|x| mod1(&-x)).collect()).collect(),
            generator_lift: None,
            source: None,
        }
    }

    /// Orthogonal sum, renormalized so the orders form a divisibility chain.
    pub fn direct_sum(parts: &[&FiniteQuadraticForm]) -> Result<Self, DiscFormError> {
        let mut orders = Vec::new();
        let mut q = Vec::new();
        for p in parts {
            orders.extend(p.orders.iter().cloned());
            q.extend(p.q.iter().cloned());
        }
        let k = orders.len();
        let mut b = vec![vec![BigRational::zero(); k]; k];
        let mut off = 0usize;
        for p in parts {
            let l = p.length();
            for i in 0..l {
                for j in 0..l {
                    b[off + i][off + j] = p.b[i][j].clone();
                }
            }
            off += l;
        }
        FiniteQuadraticForm { orders, q, b, generator_lift: None, source: None }.renormalize()
    }

    /// Renormalize a presentation `ℤ^k / diag(orders)` to invariant factors
    /// `d_1 | d_2 | ...` (dropping trivial factors) via SNF.
    fn renormalize(&self) -> Result<Self, DiscFormError> {
        let k = self.orders.len();
        if k == 0 {
            return Ok(Self::trivial());
        }
        let mut d = IntMatrix::zero(k, k);
        for i in 0..k {
            d.set(i, i, self.orders[i].clone());
        }
        let s = snf(&d);
        let left_inv = rational_inverse(&s.left.to_rational())
            .map_err(|e| DiscFormError::Internal(format!("left transform not invertible: {e}")))?
            .to_integer()
            .ok_or_else(|| DiscFormError::Internal("left inverse not integral".into()))?;
        let mut orders = Vec::new();
        let mut gens: Vec<Vec<BigInt>> = Vec::new();
        for i in 0..k {
            let di = &s.diag[i];
            if di.is_one() {
                continue;
            }
            orders.push(di.clone());
            gens.push(left_inv.col(i));
        }
        let q: Vec<BigRational> = gens.iter().map(|g| self.q_of(g)).collect();
        let mut b = vec![vec![BigRational::zero(); orders.len()]; orders.len()];
        for i in 0..gens.len() {
            for j in 0..gens.len() {
                b[i][j] = self.pairing_of(&gens[i], &gens[j]);
            }
        }
        Ok(FiniteQuadraticForm { orders, q, b, generator_lift: None, source: None })
    }

    /// Map a dual vector (coordinates in the source lattice basis) to its
    /// class in `A_L`. Requires the form to come from [`disc_form_of`].
    fn class_of_dual(&self, v: &[BigRational]) -> Result<Vec<BigInt>, DiscFormError> {
        let src = self
            .source
            .as_ref()
            .ok_or_else(|| DiscFormError::Internal("form has no source lattice".into()))?;
        let n = src.gram.rows();
        if v.len() != n {
            return Err(DiscFormError::Internal("dual vector has wrong length".into()));
        }
        // w = G·v must be integral for v ∈ L*
        let mut w = Vec::with_capacity(n);
        for i in 0..n {
            let mut acc = BigRational::zero();
            for j in 0..n {
                acc += BigRational::from(src.gram.at(i, j).clone()) * &v[j];
            }
            if !acc.is_integer() {
                return Err(DiscFormError::Internal("vector is not in the dual lattice".into()));
            }
            w.push(acc.to_integer());
        }
        let y = src.left.mul_vec(&w).expect("length checked");
        let mut class = Vec::new();
        for (i, d) in src.diag.iter().enumerate() {
            let rem = y[i].mod_floor(d);
            if src.kept.contains(&i) {
                class.push(rem);
            } else if !rem.is_zero() {
                return Err(DiscFormError::Internal(
                    "class has component at a trivial factor".into(),
                ));
            }
        }
        Ok(class)
    }
}

/// The discriminant form `q_L : A_L → ℚ/2ℤ` of an even nondegenerate lattice.
pub fn disc_form_of(l: &Lattice) -> Result<FiniteQuadraticForm, DiscFormError> {
    if !l.is_even() {
        return Err(DiscFormError::OddLattice);
    }
    let g = l.gram();
    let s = snf(g);
    let left_inv = rational_inverse(&s.left.to_rational())
        .map_err(|e| DiscFormError::Internal(format!("left not invertible: {e}")))?
        .to_integer()
        .ok_or_else(|| DiscFormError::Internal("left inverse not integral".into()))?;
    let g_rat = g.to_rational();
    let mut kept = Vec::new();
    let mut orders = Vec::new();
    let mut duals: Vec<Vec<BigRational>> = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        if d.is_one() {
            continue;
        }
        if d.is_zero() {
            return Err(DiscFormError::Degenerate);
        }
        kept.push(i);
        orders.push(d.clone());
        // dual vector: solve G·v = left_inv·e_i
        let x = left_inv.col(i);
        let rhs =
            RatMatrix::new(x.len(), 1, x.iter().map(|a| BigRational::from(a.clone())).collect())
                .expect("column shape");
        let v = rational_solve(&g_rat, &rhs)
            .map_err(|e| DiscFormError::Internal(format!("gram not invertible: {e}")))?;
        duals.push(v.col(0));
    }
    let k = orders.len();
    let mut q = Vec::with_capacity(k);
    let mut b = vec![vec![BigRational::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut acc = BigRational::zero();
            for r in 0..g.rows() {
                let mut gv = BigRational::zero();
                for c in 0..g.cols() {
                    gv += BigRational::from(g.at(r, c).clone()) * &duals[j][c];
                }
                acc += &duals[i][r] * gv;
            }
            if i == j {
                q.push(mod2(&acc));
            }
            b[i][j] = mod1(&acc);
        }
    }
    let lift = if k > 0 {
        let mut m = RatMatrix::zero(g.rows(), k);
        for (j, v) in duals.iter().enumerate() {
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Some(m)
    } else {
        None
    };
    Ok(FiniteQuadraticForm {
        orders,
        q,
        b,
        generator_lift: lift,
        source: Some(DiscSource { gram: g.clone(), left: s.left, diag: s.diag, kept }),
    })
}

/// Minimal number of generators of `A_L`.
pub fn length_of(q: &FiniteQuadraticForm) -> usize {
    q.length()
}

/// The rank-vs-length hypothesis `rank(T) >= l(A_T) + 2` together with an
/// indefiniteness flag. Only the hypothesis is checked here; the uniqueness
/// statement it feeds is a theorem that is cited, not computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NikulinReport {
    pub rank: usize,
    pub length: usize,
    pub indefinite: bool,
    pub holds: bool,
}

pub fn nikulin_hypothesis(l: &Lattice) -> Result<NikulinReport, DiscFormError> {
    let form = disc_form_of(l)?;
    let length = form.length();
    let (p, m) = l.signature();
    Ok(NikulinReport {
        rank: l.rank(),
        length,
        indefinite: p > 0 && m > 0,
        holds: l.rank() >= length + 2,
    })
}

/// Exhaustive isomorphism test between two finite quadratic forms.
///
/// Returns the lexicographically least witness (images of the generators of
/// `a` inside `b`) or `None`; the search is exhaustive, so `None` proves
/// non-isomorphism at this size.
pub fn are_isomorphic(
    a: &FiniteQuadraticForm,
    b: &FiniteQuadraticForm,
) -> Result<Option<Vec<Vec<BigInt>>>, DiscFormError> {
    are_isomorphic_with_bound(a, b, DEFAULT_ISO_BOUND)
}

pub fn are_isomorphic_with_bound(
    a: &FiniteQuadraticForm,
    b: &FiniteQuadraticForm,
    bound: u64,
) -> Result<Option<Vec<Vec<BigInt>>>, DiscFormError> {
    let size = a.group_order();
    if size > BigInt::from(bound) {
        return Err(DiscFormError::SizeBoundExceeded { size, bound });
    }
    if a.orders != b.orders {
        return Ok(None); // invariant factors are isomorphism invariants
    }
    if a.is_trivial() {
        return Ok(Some(vec![]));
    }
    let elements = b.elements();
    let mut images: Vec<Vec<BigInt>> = Vec::new();
    if search_iso(a, b, &elements, &mut images) {
        Ok(Some(images))
    } else {
        Ok(None)
    }
}

fn search_iso(
    a: &FiniteQuadraticForm,
    b: &FiniteQuadraticForm,
    elements: &[Vec<BigInt>],
    images: &mut Vec<Vec<BigInt>>,
) -> bool {
    let i = images.len();
    if i == a.length() {
        return iso_is_surjective(b, images);
    }
    'cand: for y in elements {
        if b.element_order(y) != a.orders[i] {
            continue;
        }
        if b.q_of(y) != a.q[i] {
            continue;
        }
        for (j, img) in images.iter().enumerate() {
            if b.pairing_of(img, y) != a.b[j][i] {
                continue 'cand;
            }
        }
        images.push(y.clone());
        if search_iso(a, b, elements, images) {
            return true;
        }
        images.pop();
    }
    false
}

/// Subgroup generated by the images must be the whole group.
fn iso_is_surjective(b: &FiniteQuadraticForm, images: &[Vec<BigInt>]) -> bool {
    let mut seen: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let zero = vec![BigInt::zero(); b.length()];
    let mut frontier = vec![zero.clone()];
    seen.insert(zero);
    while let Some(x) = frontier.pop() {
        for g in images {
            let y: Vec<BigInt> =
                x.iter().zip(g).zip(&b.orders).map(|((a, b), d)| (a + b).mod_floor(d)).collect();
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    BigInt::from(seen.len()) == b.group_order()
}

/// The gluing data of a primitive sublattice of an even unimodular lattice:
/// the subgroup `H = L/(S ⊕ T)` and the induced anti-isometry `A_S → A_T`.
#[derive(Debug, Clone)]
pub struct GluingData {
    pub ambient: Lattice,
    pub sub: Embedding,
    pub comp: Embedding,
    pub sub_form: FiniteQuadraticForm,
    pub comp_form: FiniteQuadraticForm,
    /// Coset representatives of `H` in ambient coordinates.
    pub h_reps: Vec<Vec<BigInt>>,
    /// Rows `(class in A_S, class in A_T)`; every class of `A_S` appears once.
    pub map_table: Vec<(Vec<BigInt>, Vec<BigInt>)>,
}

/// Compute the glue map `r_{S,T} = p_T ∘ (p_S|H)^{-1}` for a primitive
/// sublattice `S` of its even unimodular ambient, verifying bijectivity of
/// both projections and the anti-isometry `q_S(x) + q_T(r(x)) ≡ 0 (mod 2ℤ)`
/// on every row.
pub fn glue_map(sub: &Embedding) -> Result<GluingData, DiscFormError> {
    let ambient = sub.ambient().clone();
    if !ambient.is_unimodular() {
        return Err(DiscFormError::NotUnimodularAmbient);
    }
    if !ambient.is_even() {
        return Err(DiscFormError::NotEvenAmbient);
    }
    if !sub.is_primitive() {
        return Err(DiscFormError::NotPrimitiveSublattice);
    }
    let comp = sub.orthogonal_complement()?;
    let sub_form = disc_form_of(&sub.induced_lattice())?;
    let comp_form = disc_form_of(&comp.induced_lattice())?;

    let combined = sub.basis().hstack(comp.basis()).map_err(DiscFormError::from_mat)?;
    if combined.rows() != combined.cols() {
        return Err(DiscFormError::Internal("S ⊕ T does not have finite index".into()));
    }
    let s = snf(&combined);
    let left_inv = rational_inverse(&s.left.to_rational())
        .map_err(|e| DiscFormError::Internal(format!("left not invertible: {e}")))?
        .to_integer()
        .ok_or_else(|| DiscFormError::Internal("left inverse not integral".into()))?;

    // coset representatives of Z^n / combined·Z^n
    let mut reps: Vec<Vec<BigInt>> = vec![vec![]];
    for d in &s.diag {
        let mut next = Vec::new();
        for prefix in &reps {
            let mut i = BigInt::zero();
            while &i < d {
                let mut v = prefix.clone();
                v.push(i.clone());
                next.push(v);
                i += 1;
            }
        }
        reps = next;
    }
    let h_order = BigInt::from(reps.len());
    let expected: BigInt = sub_form.group_order() * comp_form.group_order();
    if &h_order * &h_order != expected {
        return Err(DiscFormError::Internal(format!(
            "|A_S|·|A_T| = {expected} but |H|^2 = {}",
            &h_order * &h_order
        )));
    }

    let combined_rat = combined.to_rational();
    let rank_s = sub.sub_rank();
    let mut map_table = Vec::new();
    let mut h_reps = Vec::new();
    let mut seen_s = BTreeSet::new();
    let mut seen_t = BTreeSet::new();
    for y in &reps {
        let x = left_inv.mul_vec(y).expect("length");
        let rhs =
            RatMatrix::new(x.len(), 1, x.iter().map(|a| BigRational::from(a.clone())).collect())
                .expect("shape");
        let coords = rational_solve(&combined_rat, &rhs)
            .map_err(|e| DiscFormError::Internal(format!("decomposition failed: {e}")))?;
        let s_part: Vec<BigRational> = (0..rank_s).map(|i| coords.at(i, 0).clone()).collect();
        let t_part: Vec<BigRational> =
            (rank_s..combined.cols()).map(|i| coords.at(i, 0).clone()).collect();
        let class_s = sub_form.class_of_dual(&s_part)?;
        let class_t = comp_form.class_of_dual(&t_part)?;
        if !seen_s.insert(class_s.clone()) {
            return Err(DiscFormError::Internal("p_S restricted to H is not injective".into()));
        }
        if !seen_t.insert(class_t.clone()) {
            return Err(DiscFormError::Internal("p_T restricted to H is not injective".into()));
        }
        let qs = sub_form.q_of(&class_s);
        let qt = comp_form.q_of(&class_t);
        if !mod2(&(qs.clone() + qt.clone())).is_zero() {
            return Err(DiscFormError::Internal(format!(
                "anti-isometry fails on row ({class_s:?} -> {class_t:?}): q_S = {qs}, q_T = {qt}"
            )));
        }
        h_reps.push(x);
        map_table.push((class_s, class_t));
    }
    // bijectivity onto all of A_S / A_T
    if BigInt::from(seen_s.len()) != sub_form.group_order()
        || BigInt::from(seen_t.len()) != comp_form.group_order()
    {
        return Err(DiscFormError::Internal("projection from H is not surjective".into()));
    }
    map_table.sort();
    Ok(GluingData { ambient, sub: sub.clone(), comp, sub_form, comp_form, h_reps, map_table })
}

impl DiscFormError {
    fn from_mat(e: crate::exactmat::ExactMatError) -> Self {
        DiscFormError::Internal(e.to_string())
    }
}

/// An even overlattice `M ⊇ L` together with the inclusion of `L` in the
/// basis of `M`.
#[derive(Debug, Clone)]
pub struct Overlattice {
    pub lattice: Lattice,
    /// `L` as a finite-index sublattice of the new lattice.
    pub inclusion: Embedding,
    /// Order of the isotropic subgroup that was glued in.
    pub glue_order: BigInt,
}

/// Extend an even lattice by isotropic discriminant classes: the returned
/// lattice is spanned by `L` and the lifted generators, stays even, and has
/// `d(M) = d(L) / |I|^2` for `I` the generated subgroup.
pub fn overlattice_from_isotropic(
    l: &Lattice,
    generators: &[Vec<BigInt>],
) -> Result<Overlattice, DiscFormError> {
    let form = disc_form_of(l)?;
    for (i, g) in generators.iter().enumerate() {
        if !form.q_of(g).is_zero() {
            return Err(DiscFormError::NotIsotropic { generator: i });
        }
        for (j, h) in generators.iter().enumerate() {
            if !form.pairing_of(g, h).is_zero() {
                return Err(DiscFormError::PairingNotIntegral { gen_a: i, gen_b: j });
            }
        }
    }
    // the generated subgroup, and a check that all of it is isotropic
    let mut subgroup: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    let zero = vec![BigInt::zero(); form.length()];
    subgroup.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y: Vec<BigInt> = x
                .iter()
                .zip(g)
                .zip(form.orders())
                .map(|((a, b), d)| (a + b).mod_floor(d))
                .collect();
            if subgroup.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    for x in &subgroup {
        if !form.q_of(x).is_zero() {
            return Err(DiscFormError::Internal(
                "generated subgroup is not isotropic despite isotropic generators".into(),
            ));
        }
    }
    let glue_order = BigInt::from(subgroup.len());

    if generators.is_empty() || glue_order.is_one() {
        return Ok(Overlattice {
            lattice: l.clone(),
            inclusion: Embedding::full(l.clone()),
            glue_order: BigInt::one(),
        });
    }

    let lift = form
        .generator_lift()
        .ok_or_else(|| DiscFormError::Internal("no generator lifts".into()))?;
    let n = l.rank();
    // rational coordinates of the lifted generators in the basis of L
    let mut lifted: Vec<Vec<BigRational>> = Vec::new();
    for g in generators {
        let mut v = vec![BigRational::zero(); n];
        for (j, c) in g.iter().enumerate() {
            for (row, item) in v.iter_mut().enumerate() {
                *item += BigRational::from(c.clone()) * lift.at(row, j);
            }
        }
        lifted.push(v);
    }
    // common denominator scaling
    let mut dcm = BigInt::one();
    for v in &lifted {
        for x in v {
            dcm = dcm.lcm(x.denom());
        }
    }
    let mut w = IntMatrix::zero(n, n + lifted.len());
    for i in 0..n {
        w.set(i, i, dcm.clone());
    }
    for (j, v) in lifted.iter().enumerate() {
        for i in 0..n {
            let scaled = &v[i] * BigRational::from(dcm.clone());
            debug_assert!(scaled.is_integer());
            w.set(i, n + j, scaled.to_integer());
        }
    }
    let basis_scaled = column_span_basis(&w);
    if basis_scaled.cols() != n {
        return Err(DiscFormError::Internal("overlattice basis has wrong rank".into()));
    }
    // new gram = (B/dcm)^T G (B/dcm)
    let bt_g_b = basis_scaled
        .transpose()
        .mul(l.gram())
        .and_then(|m| m.mul(&basis_scaled))
        .map_err(DiscFormError::from_mat)?;
    let dcm2 = &dcm * &dcm;
    let mut gram = IntMatrix::zero(n, n);
    for r in 0..n {
        for c in 0..n {
            let (q, rem) = bt_g_b.at(r, c).div_rem(&dcm2);
            if !rem.is_zero() {
                return Err(DiscFormError::Internal("overlattice gram not integral".into()));
            }
            gram.set(r, c, q);
        }
    }
    let lattice = Lattice::new(gram)?;
    if !lattice.is_even() {
        return Err(DiscFormError::Internal("overlattice gram not even".into()));
    }
    // d(M) = d(L) / |I|^2
    let expected = l.abs_det() / (&glue_order * &glue_order);
    if lattice.abs_det() != expected {
        return Err(DiscFormError::Internal(format!(
            "overlattice determinant {} != {}",
            lattice.abs_det(),
            expected
        )));
    }
    // inclusion of L: the old basis vectors in the new basis are the columns
    // of dcm · basis_scaled^{-1}
    let mut dcm_id = RatMatrix::zero(n, n);
    for i in 0..n {
        dcm_id.set(i, i, BigRational::from(dcm.clone()));
    }
    let sol = rational_solve(&basis_scaled.to_rational(), &dcm_id)
        .map_err(|e| DiscFormError::Internal(format!("inclusion solve failed: {e}")))?;
    let incl = sol
        .to_integer()
        .ok_or_else(|| DiscFormError::Internal("inclusion is not integral".into()))?;
    let inclusion = Embedding::new(lattice.clone(), incl)?;
    Ok(Overlattice { lattice, inclusion, glue_order })
}
