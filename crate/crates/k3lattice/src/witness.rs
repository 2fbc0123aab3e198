//! An explicit primitive embedding of `U ⊕ A5^3` into the K3 lattice
//! `U^3 ⊕ E8^2`, with orthogonal complement of signature (2,3), determinant
//! 216 and discriminant form anti-isometric to that of `U ⊕ A5^3`.
//!
//! The construction places `U` on the first hyperbolic summand and two `A5`
//! chains on sub-diagrams of the two `E8` summands; the third `A5` is found
//! by a bounded, deterministic backtracking search for a chain of five
//! (-2)-vectors inside the remaining signature-(2,8) block
//! `U ⊕ U ⊕ (A5-complement in E8)^2`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::discform::{are_isomorphic, disc_form_of, DiscFormError};
use crate::lattice::{catalog_sum, CatalogName, Embedding, Lattice, LatticeError};

#[derive(Debug, Clone)]
pub enum WitnessError {
    SearchExhausted { chains_tried: u64, max_box: i64 },
    Lattice(LatticeError),
    Disc(DiscFormError),
}

impl fmt::Display for WitnessError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessError::SearchExhausted { chains_tried, max_box } => write!(
                f,
                "no A5 chain with the required complement found ({chains_tried} chains tried, box radius {max_box})"
            ),
            WitnessError::Lattice(e) => write!(f, "{e}"),
            WitnessError::Disc(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for WitnessError {}

impl From<LatticeError> for WitnessError {
    fn from(e: LatticeError) -> Self {
        WitnessError::Lattice(e)
    }
}

impl From<DiscFormError> for WitnessError {
    fn from(e: DiscFormError) -> Self {
        WitnessError::Disc(e)
    }
}

/// The verified witness: the embedding, its complement and the discriminant
/// anti-isometry.
#[derive(Debug, Clone)]
pub struct NsEmbeddingWitness {
    /// `U^3 ⊕ E8^2`.
    pub ambient: Lattice,
    /// `U ⊕ A5^3` primitively embedded (22 x 17 basis).
    pub embedding: Embedding,
    /// The rank-5 orthogonal complement `T`.
    pub complement: Embedding,
    pub complement_signature: (usize, usize),
    pub complement_abs_det: BigInt,
    /// Generator images witnessing `q_T ≅ -q_{U ⊕ A5^3}`.
    pub disc_witness: Vec<Vec<BigInt>>,
    pub chains_tried: u64,
    pub box_radius: i64,
}

/// Bourbaki chain `1 - 3 - 4 - 5 - 6` inside `E8`, as 0-based indices.
const A5_CHAIN_IN_E8: [usize; 5] = [0, 2, 3, 4, 5];

/// Deterministic search for the full embedding. Box radii 2 and 3 are tried
/// in order; roots and chains are enumerated in lexicographic order, so the
/// returned witness is reproducible.
pub fn find_ns_embedding() -> Result<NsEmbeddingWitness, WitnessError> {
    let ambient = catalog_sum(&[
        CatalogName::U,
        CatalogName::U,
        CatalogName::U,
        CatalogName::E(8),
        CatalogName::E(8),
    ])?;
    let n = ambient.rank();

    // fixed part: U on the first summand, A5 chains in the two E8 blocks
    let mut fixed: Vec<Vec<BigInt>> = vec![unit(n, 0), unit(n, 1)];
    for block in [6usize, 14] {
        for i in A5_CHAIN_IN_E8 {
            fixed.push(unit(n, block + i));
        }
    }

    // remaining block M = U2 ⊕ U3 ⊕ C1 ⊕ C2 with C_i the chain complement
    let e8 = crate::lattice::catalog(CatalogName::E(8))?;
    let chain_in_e8 = Embedding::coordinate_sub(e8, &A5_CHAIN_IN_E8)?;
    let comp_in_e8 = chain_in_e8.orthogonal_complement()?;
    let mut m_cols: Vec<Vec<BigInt>> = vec![unit(n, 2), unit(n, 3), unit(n, 4), unit(n, 5)];
    for block in [6usize, 14] {
        for j in 0..comp_in_e8.basis().cols() {
            let mut v = vec![BigInt::zero(); n];
            for i in 0..8 {
                v[block + i] = comp_in_e8.basis().at(i, j).clone();
            }
            m_cols.push(v);
        }
    }
    let m_block = Embedding::from_vectors(ambient.clone(), &m_cols)?;
    debug_assert_eq!(m_block.induced_lattice().signature(), (2, 8));
    debug_assert_eq!(m_block.induced_lattice().abs_det(), BigInt::from(36));

    // small-integer Gram of M for the chain search
    let mg = m_block.induced_gram();
    let dim = mg.rows();
    let gram: Vec<Vec<i64>> = (0..dim)
        .map(|i| (0..dim).map(|j| mg.at(i, j).to_i64().expect("small gram entries")).collect())
        .collect();

    let mut chains_tried = 0u64;
    for radius in [2i64, 3] {
        let roots = roots_in_box(&gram, radius);
        // gram·root is precomputed so a pairing is a single dot product
        let nr = roots.len();
        let gram_roots: Vec<Vec<i64>> = roots
            .iter()
            .map(|r| (0..dim).map(|j| (0..dim).map(|i| r[i] * gram[i][j]).sum()).collect())
            .collect();
        let mut pairings: Vec<Vec<i64>> = vec![vec![0; nr]; nr];
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nr];
        for i in 0..nr {
            for j in 0..nr {
                let p = roots[i].iter().zip(&gram_roots[j]).map(|(x, y)| x * y).sum();
                pairings[i][j] = p;
                if i != j && p == 1 {
                    adj[i].push(j);
                }
            }
        }
        let ctx = SearchContext { ambient: &ambient, fixed: &fixed, m_block: &m_block, roots: &roots, adj: &adj, pairings: &pairings };
        let mut chain: Vec<usize> = Vec::new();
        if let Some(w) = extend_chain(&ctx, &mut chain, &mut chains_tried)? {
            return Ok(NsEmbeddingWitness { box_radius: radius, chains_tried, ..w });
        }
    }
    Err(WitnessError::SearchExhausted { chains_tried, max_box: 3 })
}

struct SearchContext<'a> {
    ambient: &'a Lattice,
    fixed: &'a [Vec<BigInt>],
    m_block: &'a Embedding,
    roots: &'a [Vec<i64>],
    adj: &'a [Vec<usize>],
    pairings: &'a [Vec<i64>],
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::from(1);
    v
}

/// All vectors of norm -2 with coordinates in `[-radius, radius]`, in
/// lexicographic order. The norm is maintained incrementally along the
/// recursion: setting `x[l] = v` adds `v^2·g[l][l] + 2v·acc[l]` where `acc`
/// is the gram-weighted prefix sum.
fn roots_in_box(gram: &[Vec<i64>], radius: i64) -> Vec<Vec<i64>> {
    let dim = gram.len();
    let mut out = Vec::new();
    let mut x = vec![0i64; dim];
    let mut acc = vec![0i64; dim];
    scan(gram, radius, 0, 0, &mut x, &mut acc, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn scan(
    gram: &[Vec<i64>],
    radius: i64,
    level: usize,
    norm: i64,
    x: &mut Vec<i64>,
    acc: &mut Vec<i64>,
    out: &mut Vec<Vec<i64>>,
) {
    let dim = gram.len();
    if level == dim {
        if norm == -2 {
            out.push(x.clone());
        }
        return;
    }
    for v in -radius..=radius {
        x[level] = v;
        let norm2 = norm + v * v * gram[level][level] + 2 * v * acc[level];
        if v != 0 {
            for j in 0..dim {
                acc[j] += v * gram[level][j];
            }
        }
        scan(gram, radius, level + 1, norm2, x, acc, out);
        if v != 0 {
            for j in 0..dim {
                acc[j] -= v * gram[level][j];
            }
        }
    }
    x[level] = 0;
}

fn extend_chain(
    ctx: &SearchContext<'_>,
    chain: &mut Vec<usize>,
    chains_tried: &mut u64,
) -> Result<Option<NsEmbeddingWitness>, WitnessError> {
    if chain.len() == 5 {
        *chains_tried += 1;
        return check_chain(ctx, chain);
    }
    let all_roots: Vec<usize>;
    let candidates: &[usize] = match chain.last() {
        None => {
            all_roots = (0..ctx.roots.len()).collect();
            &all_roots
        }
        Some(&last) => &ctx.adj[last],
    };
    'cand: for &c in candidates {
        // orthogonal to all non-neighbors in the chain
        if chain.len() >= 2 {
            for &earlier in &chain[..chain.len() - 1] {
                if ctx.pairings[earlier][c] != 0 {
                    continue 'cand;
                }
            }
        }
        chain.push(c);
        if let Some(w) = extend_chain(ctx, chain, chains_tried)? {
            return Ok(Some(w));
        }
        chain.pop();
    }
    Ok(None)
}

fn check_chain(
    ctx: &SearchContext<'_>,
    chain: &[usize],
) -> Result<Option<NsEmbeddingWitness>, WitnessError> {
    let ambient = ctx.ambient;
    // chain vectors in ambient coordinates
    let n = ambient.rank();
    let mut cols = ctx.fixed.to_vec();
    for &idx in chain {
        let coeffs = &ctx.roots[idx];
        let mut v = vec![BigInt::zero(); n];
        for (j, &c) in coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let col = ctx.m_block.basis().col(j);
            for i in 0..n {
                v[i] += BigInt::from(c) * &col[i];
            }
        }
        cols.push(v);
    }
    let Ok(embedding) = Embedding::from_vectors(ambient.clone(), &cols) else {
        return Ok(None); // dependent columns: not a valid chain placement
    };
    // the embedded lattice must be exactly U ⊕ A5^3
    let expected = catalog_sum(&[
        CatalogName::U,
        CatalogName::A(5),
        CatalogName::A(5),
        CatalogName::A(5),
    ])?;
    if embedding.induced_gram() != *expected.gram() {
        return Ok(None);
    }
    if !embedding.is_primitive() {
        return Ok(None);
    }
    let complement = embedding.orthogonal_complement()?;
    if complement.sub_rank() != 5 {
        return Ok(None);
    }
    let t = complement.induced_lattice();
    if t.signature() != (2, 3) || t.abs_det() != BigInt::from(216) {
        return Ok(None);
    }
    let q_t = disc_form_of(&t)?;
    let q_ns = disc_form_of(&expected)?;
    let Some(witness) = are_isomorphic(&q_t, &q_ns.negate())? else {
        return Ok(None);
    };
    Ok(Some(NsEmbeddingWitness {
        ambient: ambient.clone(),
        embedding,
        complement_signature: t.signature(),
        complement_abs_det: t.abs_det(),
        complement,
        disc_witness: witness,
        chains_tried: 0,
        box_radius: 0,
    }))
}
