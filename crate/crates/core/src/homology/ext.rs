use super::resolution::{free_resolution, ResolutionChain};
use super::ModulePresentation;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::groebner::{syzygy_basis, Term, Vector, VectorOps};
use crate::poly::{PolyRing, Polynomial};
use crate::ring::RingSpec;

/// `Ext^i_S(M, S)` with the kernel vectors its generators come from.
#[derive(Clone, Debug)]
pub struct ExtModule<F: Field> {
    pub index: usize,
    pub presentation: ModulePresentation<F>,
    /// Generators as elements of the dual free module `F_i^*`.
    pub lifts: Vec<Vector<F>>,
}

/// The transpose of a matrix given by columns: `rows` vectors of the source
/// dual, one per row of the original.
fn transpose<F: Field>(ring: &PolyRing<F>, columns: &[Vector<F>], rows: usize) -> Vec<Vector<F>> {
    let ops = VectorOps::new(ring);
    let mut out: Vec<Vec<Term<F>>> = vec![Vec::new(); rows];
    for (j, col) in columns.iter().enumerate() {
        for t in col.terms() {
            out[t.pos].push(Term { pos: j, mono: t.mono.clone(), coeff: t.coeff.clone() });
        }
    }
    out.into_iter().map(|terms| ops.from_terms(terms)).collect()
}

fn negated(ds: &[i32]) -> Vec<i32> {
    ds.iter().map(|d| -d).collect()
}

/// `Ext^i` from a resolution that reaches at least step `i + 1` (or is complete).
fn ext_from_resolution<F: Field>(
    ring: &std::sync::Arc<PolyRing<F>>,
    res: &ResolutionChain<F>,
    i: usize,
) -> ExtModule<F> {
    let dual_i = negated(res.degrees(i));
    let r_i = dual_i.len();
    // kernel of A_{i+1}^T : F_i^* -> F_{i+1}^*
    let next = res.map(i + 1);
    let kernel: Vec<Vector<F>> = if next.is_empty() {
        (0..r_i).map(|k| Vector::unit(ring, k)).collect()
    } else {
        let dual_next = negated(res.degrees(i + 1));
        let rows = transpose(ring, next, r_i);
        let syz = syzygy_basis(ring, &dual_next, &rows, &dual_i, None);
        crate::groebner::minimal_generators(ring, &dual_i, &syz)
    };
    if kernel.is_empty() {
        let presentation = ModulePresentation::free(ring.clone(), Vec::new());
        return ExtModule { index: i, presentation, lifts: Vec::new() };
    }
    let gen_degrees: Vec<i32> = kernel.iter().map(|k| k.degree(&dual_i).unwrap()).collect();
    // relations: coefficient vectors c with sum c_l k_l in the image of A_i^T
    let mut cols = kernel.clone();
    let mut src = gen_degrees.clone();
    if i >= 1 {
        let prev = res.map(i);
        let image = transpose(ring, prev, res.degrees(i - 1).len());
        cols.extend(image);
        src.extend(negated(res.degrees(i - 1)));
    }
    let s = kernel.len();
    let syz = syzygy_basis(ring, &dual_i, &cols, &src, None);
    let relations: Vec<Vector<F>> = syz.iter().map(|v| v.project(0..s)).filter(|v| !v.is_zero()).collect();
    let full = ModulePresentation::new(ring.clone(), gen_degrees, relations, None).expect("homogeneous by construction");
    let (presentation, kept) = full.minimize_tracked();
    let lifts = kept.iter().map(|&k| kernel[k].clone()).collect();
    ExtModule { index: i, presentation, lifts }
}

/// `Ext^i_S(M, S)` as a minimal presentation.
pub fn ext_module<F: Field>(m: &ModulePresentation<F>, i: usize) -> Result<ExtModule<F>> {
    let res = free_resolution(m, i + 1)?;
    Ok(ext_from_resolution(m.ring(), &res, i))
}

/// `Ext^i_S(R, S)` for `i = 0..=n` from a single resolution.
#[derive(Clone, Debug)]
pub struct ExtTable<F: Field> {
    pub resolution: ResolutionChain<F>,
    pub modules: Vec<ExtModule<F>>,
}

impl<F: Field> ExtTable<F> {
    pub fn new(m: &ModulePresentation<F>) -> Result<Self> {
        let n = m.ring().nvars();
        let resolution = free_resolution(m, n + 1)?;
        let modules = (0..=n).map(|i| ext_from_resolution(m.ring(), &resolution, i)).collect();
        Ok(Self { resolution, modules })
    }

    pub fn get(&self, i: usize) -> Option<&ExtModule<F>> {
        self.modules.get(i)
    }

    /// Indices with nonzero Ext.
    pub fn nonzero(&self) -> Vec<usize> {
        self.modules.iter().filter(|e| !e.presentation.is_zero()).map(|e| e.index).collect()
    }

    /// `n - max{i : Ext^i != 0}`; fails for the zero module.
    pub fn depth(&self) -> Result<usize> {
        let n = self.modules.len() - 1;
        match self.nonzero().last() {
            Some(&top) => Ok(n - top),
            None => Err(Error::ZeroModule),
        }
    }
}

/// `ω_R = Ext^{n-d}_S(R, S)`.
pub fn canonical_module<F: Field>(spec: &RingSpec<F>) -> Result<ExtModule<F>> {
    ext_module(&ModulePresentation::of_ring(spec), spec.codim())
}

/// `n - max{i : Ext^i_S(M, S) != 0}`.
pub fn depth<F: Field>(m: &ModulePresentation<F>) -> Result<usize> {
    ExtTable::new(m)?.depth()
}

/// For a nonzerodivisor `x` on `R`: whether `x` is a nonzerodivisor on
/// `Ext^{n-d+1}_S(R, S)` (true when that module vanishes).
pub fn att_avoidance<F: Field>(x: &Polynomial<F>, spec: &RingSpec<F>) -> Result<bool> {
    let ring = spec.ring();
    ring.check(x)?;
    if x.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !x.is_homogeneous() {
        return Err(Error::NotHomogeneous(ring.format(x)));
    }
    if spec.ideal().colon_poly(x)? != *spec.ideal() {
        return Err(Error::ZeroDivisor(ring.format(x)));
    }
    let i = spec.codim() + 1;
    if i > spec.nvars() {
        return Ok(true);
    }
    let e = ext_module(&ModulePresentation::of_ring(spec), i)?;
    if e.presentation.is_zero() {
        return Ok(true);
    }
    e.presentation.is_nzd(x)
}
