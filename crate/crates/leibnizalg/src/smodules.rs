//! Module machinery over a semisimple Levi subalgebra S: spaces of
//! equivariant maps, decompositions into simple ideals and simple
//! submodules, and the canonical splitting of S and of the squares ideal
//! induced by the Hom space.
//!
//! All splitting is exact over the rationals. When a split would require an
//! irrational eigenvalue the routines return `NonSplit` instead of
//! approximating; callers downgrade their conclusions accordingly.

use crate::algebra::AlgebraTable;
use crate::error::{Error, Result};
use crate::levi::verify_levi;
use crate::linmap::LinearMap;
use crate::matrix::{eval_poly, rational_roots, Matrix, Vector};
use crate::scalar::int;
use crate::subspace::Subspace;
use num_traits::Zero;

/// Canonical basis of the space of S-equivariant linear maps U -> V.
///
/// Maps are stored in the canonical-basis coordinates of the two
/// subspaces: each has `source.dim()` rows and `target.dim()` columns.
#[derive(Clone, Debug)]
pub struct HomBasis {
    source: Subspace,
    target: Subspace,
    maps: Vec<LinearMap>,
    flat: Subspace,
}

impl HomBasis {
    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn is_zero_space(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn maps(&self) -> &[LinearMap] {
        &self.maps
    }

    pub fn map(&self, k: usize) -> &LinearMap {
        &self.maps[k]
    }

    pub fn source(&self) -> &Subspace {
        &self.source
    }

    pub fn target(&self) -> &Subspace {
        &self.target
    }

    /// The map with the given coefficients over the basis.
    pub fn linear_combination(&self, coeffs: &Vector) -> LinearMap {
        assert_eq!(coeffs.dim(), self.maps.len(), "one coefficient per basis map");
        let mut out = LinearMap::zero(self.source.dim(), self.target.dim());
        for (c, m) in coeffs.coords().iter().zip(&self.maps) {
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// Whether a map (in subspace coordinates) lies in the span.
    pub fn contains(&self, map: &LinearMap) -> bool {
        self.flat.contains(&map.flatten())
    }

    /// Apply basis map k to an ambient vector of the source subspace,
    /// producing an ambient vector of the target.
    pub fn apply_ambient(&self, k: usize, v: &Vector) -> Result<Vector> {
        let coords = self.source.coordinates(v).ok_or_else(|| {
            Error::PreconditionFailed("vector is outside the source subspace".into())
        })?;
        Ok(self.target.embed(&self.maps[k].apply(&coords)))
    }

    /// Ambient image subspace of basis map k.
    pub fn image_ambient(&self, k: usize) -> Subspace {
        let rows = (0..self.source.dim())
            .map(|r| self.target.embed(&self.maps[k].matrix().row(r)))
            .collect();
        Subspace::from_rows(self.target.ambient(), rows)
    }
}

/// Matrices (in V's coordinates) of right multiplication by each basis
/// element of S, restricted to V. Fails when V is not a right S-module.
pub fn right_actions(table: &AlgebraTable, s: &Subspace, v: &Subspace) -> Result<Vec<Matrix>> {
    s.basis_rows()
        .iter()
        .map(|x| {
            table
                .right_mult(x)
                .restrict_endo(v)
                .map(|f| f.matrix().clone())
                .map_err(|_| Error::NotAModule)
        })
        .collect()
}

/// Flattened canonical solutions of A_x T = T B_x for all x.
fn equivariant_solutions(a_ops: &[Matrix], b_ops: &[Matrix], u: usize, v: usize) -> Vec<Vector> {
    assert_eq!(a_ops.len(), b_ops.len());
    let unknowns = u * v;
    let mut sys = Matrix::zero(a_ops.len() * unknowns, unknowns);
    for (x, (a, b)) in a_ops.iter().zip(b_ops).enumerate() {
        let base = x * unknowns;
        for r in 0..u {
            for c in 0..v {
                let eq = base + r * v + c;
                // (A T)[r,c] = sum_p A[r,p] T[p,c]
                for p in 0..u {
                    let coeff = a.get(r, p);
                    if !coeff.is_zero() {
                        let col = p * v + c;
                        let cur = sys.get(eq, col) + coeff;
                        sys.set(eq, col, cur);
                    }
                }
                // -(T B)[r,c] = -sum_q T[r,q] B[q,c]
                for q in 0..v {
                    let coeff = b.get(q, c);
                    if !coeff.is_zero() {
                        let col = r * v + q;
                        let cur = sys.get(eq, col) - coeff;
                        sys.set(eq, col, cur);
                    }
                }
            }
        }
    }
    let kernel = sys.null_space();
    // Canonicalize the basis of the solution space.
    Subspace::from_rows(unknowns, kernel).basis_rows()
}

/// Equivariant maps U -> V for arbitrary right S-modules inside the
/// algebra (maps theta with theta([u, x]) = [theta(u), x] for all x in S).
pub fn module_hom_space(
    table: &AlgebraTable,
    s: &Subspace,
    u: &Subspace,
    v: &Subspace,
) -> Result<HomBasis> {
    if !table.is_subalgebra(s) {
        return Err(Error::PreconditionFailed("S must be a subalgebra".into()));
    }
    let a_ops = right_actions(table, s, u)?;
    let b_ops = right_actions(table, s, v)?;
    let flats = equivariant_solutions(&a_ops, &b_ops, u.dim(), v.dim());
    let maps: Vec<LinearMap> = flats
        .iter()
        .map(|f| LinearMap::from_flat(u.dim(), v.dim(), f))
        .collect();
    // Re-verify the defining identity on every returned map.
    for m in &maps {
        for (x_idx, a) in a_ops.iter().enumerate() {
            let lhs = Matrix::mul(a, m.matrix());
            let rhs = m.matrix().mul(&b_ops[x_idx]);
            if lhs != rhs {
                return Err(Error::PostconditionFailed(
                    "solver produced a non-equivariant map".into(),
                ));
            }
        }
    }
    let flat = Subspace::from_rows(u.dim() * v.dim(), flats);
    Ok(HomBasis { source: u.clone(), target: v.clone(), maps, flat })
}

/// Equivariant maps from S (as a right module over itself) to V.
pub fn hom_space(table: &AlgebraTable, s: &Subspace, v: &Subspace) -> Result<HomBasis> {
    module_hom_space(table, s, s, v)
}

/// Dimension of the endomorphism algebra of V as a right S-module. The
/// value 1 certifies absolute irreducibility.
pub fn end_dimension(table: &AlgebraTable, s: &Subspace, v: &Subspace) -> Result<usize> {
    Ok(module_hom_space(table, s, v, v)?.dim())
}

/// Deterministic candidate elements of a commutant algebra, used to find a
/// splitting operator: basis elements first, then small pairwise
/// combinations.
fn split_candidates(basis: &[LinearMap]) -> Vec<LinearMap> {
    let mut out: Vec<LinearMap> = basis.to_vec();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            out.push(basis[i].add(&basis[j]));
        }
    }
    let two = int(2);
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j {
                out.push(basis[i].add(&basis[j].scale(&two)));
            }
        }
    }
    out
}

/// Split W along the primary decomposition of an operator (given in W's
/// coordinates): one component per distinct rational root of the minimal
/// polynomial, plus one for the rootless residual factor. Returns None when
/// the operator does not separate anything.
fn primary_split(t: &LinearMap, w: &Subspace) -> Option<Vec<Subspace>> {
    let p = t.matrix().min_poly();
    let roots = rational_roots(&p);
    // Residual factor after dividing out all rational linear factors.
    let mut residual = p.clone();
    for (r, m) in &roots {
        for _ in 0..*m {
            let (q, rem) = crate::matrix::divide_linear(&residual, r);
            debug_assert!(rem.is_zero());
            residual = q;
        }
    }
    let parts = roots.len() + usize::from(residual.len() > 1);
    if parts < 2 {
        return None;
    }
    let mut components = Vec::new();
    let n = w.dim();
    for (r, m) in &roots {
        // ker (T - r)^m
        let mut shifted = t.matrix().clone();
        for d in 0..n {
            let cur = shifted.get(d, d) - r;
            shifted.set(d, d, cur);
        }
        let powered = shifted.pow(*m);
        let kernel = LinearMap::new(n, n, powered).kernel();
        components.push(embed_all(w, &kernel));
    }
    if residual.len() > 1 {
        let q_of_t = eval_poly(&residual, t.matrix());
        let kernel = LinearMap::new(n, n, q_of_t).kernel();
        components.push(embed_all(w, &kernel));
    }
    debug_assert_eq!(components.iter().map(Subspace::dim).sum::<usize>(), w.dim());
    Some(components)
}

fn embed_all(w: &Subspace, coords: &Subspace) -> Subspace {
    Subspace::from_rows(
        w.ambient(),
        coords.basis_rows().iter().map(|c| w.embed(c)).collect(),
    )
}

/// Recursively split a right S-module into components whose endomorphism
/// algebras are one-dimensional.
fn split_until_simple(
    table: &AlgebraTable,
    s: &Subspace,
    w: &Subspace,
) -> Result<Vec<Subspace>> {
    if w.is_zero() {
        return Ok(Vec::new());
    }
    let end_flats = {
        let ops = right_actions(table, s, w)?;
        equivariant_solutions(&ops, &ops, w.dim(), w.dim())
    };
    let end_maps: Vec<LinearMap> = end_flats
        .iter()
        .map(|f| LinearMap::from_flat(w.dim(), w.dim(), f))
        .collect();
    if end_maps.len() == 1 {
        return Ok(vec![w.clone()]);
    }
    for cand in split_candidates(&end_maps) {
        if let Some(parts) = primary_split(&cand, w) {
            let mut out = Vec::new();
            for part in parts {
                out.extend(split_until_simple(table, s, &part)?);
            }
            out.sort_by(|a, b| a.canonical_cmp(b));
            return Ok(out);
        }
    }
    Err(Error::NonSplit(format!(
        "endomorphism algebra of dimension {} admits no split along rational eigenvalues",
        end_maps.len()
    )))
}

/// Decompose a semisimple subalgebra S into its simple ideals.
pub fn simple_ideal_decomposition(table: &AlgebraTable, s: &Subspace) -> Result<Vec<Subspace>> {
    let check = verify_levi(table, s)?;
    if !(check.closed && check.lie && check.semisimple) {
        return Err(Error::PreconditionFailed(
            "ideal decomposition requires a semisimple Lie subalgebra".into(),
        ));
    }
    if s.is_zero() {
        return Ok(Vec::new());
    }
    // S is its own right module under the product; submodule components of
    // the splitting are two-sided ideals by antisymmetry.
    let parts = split_until_simple(table, s, s)?;
    // Postconditions: ideals, pairwise independent, spanning, and simple.
    let mut sum = Subspace::zero(s.ambient());
    for (idx, g) in parts.iter().enumerate() {
        if !table.subspace_product(g, s).is_contained_in(g)
            || !table.subspace_product(s, g).is_contained_in(g)
        {
            return Err(Error::PostconditionFailed("component is not an ideal".into()));
        }
        for h in &parts[idx + 1..] {
            if !g.intersect(h).is_zero() {
                return Err(Error::PostconditionFailed("components overlap".into()));
            }
        }
        // Simplicity: the ideal of S generated by any nonzero basis vector
        // of the component is the whole component.
        for row in g.basis_rows() {
            let generated = ideal_closure_in(table, s, &Subspace::from_rows(s.ambient(), vec![row]));
            if &generated != g {
                return Err(Error::PostconditionFailed(
                    "component contains a proper nonzero ideal".into(),
                ));
            }
        }
        sum = sum.sum(g);
    }
    if &sum != s {
        return Err(Error::PostconditionFailed("components do not span".into()));
    }
    Ok(parts)
}

/// Smallest subspace containing `seed` closed under products with S on
/// both sides.
fn ideal_closure_in(table: &AlgebraTable, s: &Subspace, seed: &Subspace) -> Subspace {
    let mut cur = seed.clone();
    loop {
        let grown = cur
            .sum(&table.subspace_product(&cur, s))
            .sum(&table.subspace_product(s, &cur));
        if grown.dim() == cur.dim() {
            return cur;
        }
        cur = grown;
    }
}

/// Decompose a left-annihilated right S-module into simple components,
/// each certified absolutely irreducible by a one-dimensional endomorphism
/// algebra.
pub fn simple_module_decomposition(
    table: &AlgebraTable,
    s: &Subspace,
    v: &Subspace,
) -> Result<Vec<Subspace>> {
    if !table.subspace_product(s, v).is_zero() {
        return Err(Error::NotAModule);
    }
    let parts = split_until_simple(table, s, v)?;
    let mut sum = Subspace::zero(v.ambient());
    for (idx, p) in parts.iter().enumerate() {
        for q in &parts[idx + 1..] {
            if !p.intersect(q).is_zero() {
                return Err(Error::PostconditionFailed("components overlap".into()));
            }
        }
        sum = sum.sum(p);
    }
    if &sum != v {
        return Err(Error::PostconditionFailed("components do not span".into()));
    }
    Ok(parts)
}

/// The canonical splitting induced by the Hom space: J collects every Hom
/// image inside the squares ideal, K is an equivariant complement, G is the
/// sum of simple ideals of S supporting some Hom-basis map, Q is the sum of
/// the others.
#[derive(Clone, Debug)]
pub struct CanonicalDecomposition {
    pub g: Subspace,
    pub q: Subspace,
    pub j: Subspace,
    pub k: Subspace,
    pub simple_ideals: Vec<Subspace>,
    /// Parallel to `simple_ideals`: the simple-module components of each
    /// ideal's Hom image (empty when the ideal supports no Hom map).
    pub j_components: Vec<Vec<Subspace>>,
}

/// Sum of all Hom-basis images inside the squares ideal.
pub fn hom_image_sum(table: &AlgebraTable, s: &Subspace, i: &Subspace) -> Result<Subspace> {
    let homs = hom_space(table, s, i)?;
    let mut j = Subspace::zero(table.dim());
    for k in 0..homs.dim() {
        j = j.sum(&homs.image_ambient(k));
    }
    Ok(j)
}

pub fn canonical_decomposition(table: &AlgebraTable, s: &Subspace) -> Result<CanonicalDecomposition> {
    let check = verify_levi(table, s)?;
    if !check.passed() {
        return Err(Error::PreconditionFailed(
            "canonical decomposition requires a verified Levi subalgebra".into(),
        ));
    }
    let i = crate::radicals::squares_ideal(table)?;
    let homs = hom_space(table, s, &i)?;
    let mut j = Subspace::zero(table.dim());
    for k in 0..homs.dim() {
        j = j.sum(&homs.image_ambient(k));
    }
    let k_space = equivariant_complement(table, s, &i, &j)?;

    // Split S and apportion the ideals by Hom support.
    let simple_ideals = simple_ideal_decomposition(table, s)?;
    let mut g = Subspace::zero(table.dim());
    let mut q = Subspace::zero(table.dim());
    let mut j_components = Vec::with_capacity(simple_ideals.len());
    for gi in &simple_ideals {
        // theta restricted to the ideal: nonzero for some basis map?
        let gi_rows = gi.basis_rows();
        let mut image = Subspace::zero(table.dim());
        for k in 0..homs.dim() {
            let rows: Vec<Vector> = gi_rows
                .iter()
                .map(|r| homs.apply_ambient(k, r))
                .collect::<Result<_>>()?;
            image = image.sum(&Subspace::from_rows(table.dim(), rows));
        }
        if image.is_zero() {
            q = q.sum(gi);
            j_components.push(Vec::new());
            continue;
        }
        g = g.sum(gi);
        let comps = simple_module_decomposition(table, s, &image)?;
        // Every component must be module-isomorphic to the ideal.
        for c in &comps {
            let iso = module_hom_space(table, s, gi, c)?;
            let invertible = iso.dim() >= 1
                && gi.dim() == c.dim()
                && iso.maps().iter().any(LinearMap::is_invertible);
            if !invertible {
                return Err(Error::PostconditionFailed(
                    "Hom-image component is not isomorphic to its supporting ideal".into(),
                ));
            }
        }
        j_components.push(comps);
    }

    // Invariants.
    if !g.intersect(&q).is_zero() || g.sum(&q) != *s {
        return Err(Error::PostconditionFailed("S does not split as G + Q".into()));
    }
    if !j.intersect(&k_space).is_zero() || j.sum(&k_space) != i {
        return Err(Error::PostconditionFailed("I does not split as J + K".into()));
    }
    if hom_space(table, s, &k_space)?.dim() != 0 {
        return Err(Error::PostconditionFailed(
            "the complement K admits a nonzero equivariant map from S".into(),
        ));
    }
    Ok(CanonicalDecomposition { g, q, j, k: k_space, simple_ideals, j_components })
}

/// An S-equivariant complement of J inside I, as the kernel of an
/// equivariant projection fixed on J with image inside J.
fn equivariant_complement(
    table: &AlgebraTable,
    s: &Subspace,
    i: &Subspace,
    j: &Subspace,
) -> Result<Subspace> {
    let d = i.dim();
    if d == 0 {
        return Ok(Subspace::zero(table.dim()));
    }
    let ops = right_actions(table, s, i)?;
    // J in I-coordinates.
    let j_rows: Vec<Vector> = j
        .basis_rows()
        .iter()
        .map(|r| {
            i.coordinates(r).ok_or_else(|| {
                Error::PostconditionFailed("Hom image escapes the squares ideal".into())
            })
        })
        .collect::<Result<_>>()?;
    let j_in_i = Subspace::from_rows(d, j_rows.clone());

    let unknowns = d * d;
    let eq_blocks = ops.len() * unknowns + j_rows.len() * d + d * d;
    let mut sys = Matrix::zero(eq_blocks, unknowns);
    let mut rhs = Vector::zero(eq_blocks);
    let mut eq = 0;
    // Equivariance: A pi - pi A = 0.
    for a in &ops {
        for r in 0..d {
            for c in 0..d {
                for p in 0..d {
                    let coeff = a.get(r, p);
                    if !coeff.is_zero() {
                        let col = p * d + c;
                        let cur = sys.get(eq, col) + coeff;
                        sys.set(eq, col, cur);
                    }
                    let coeff = a.get(p, c);
                    if !coeff.is_zero() {
                        let col = r * d + p;
                        let cur = sys.get(eq, col) - coeff;
                        sys.set(eq, col, cur);
                    }
                }
                eq += 1;
            }
        }
    }
    // pi fixes J pointwise: v pi = v for J basis rows.
    for v in &j_rows {
        for c in 0..d {
            for p in 0..d {
                if !v.get(p).is_zero() {
                    let col = p * d + c;
                    let cur = sys.get(eq, col) + v.get(p);
                    sys.set(eq, col, cur);
                }
            }
            rhs.set(eq, v.get(c).clone());
            eq += 1;
        }
    }
    // Every row of pi lies in J: the residue after reduction vanishes.
    let residues: Vec<Vector> = (0..d).map(|qi| j_in_i.reduce(&Vector::basis(d, qi))).collect();
    for p in 0..d {
        for c in 0..d {
            for (qi, res) in residues.iter().enumerate() {
                if !res.get(c).is_zero() {
                    let col = p * d + qi;
                    let cur = sys.get(eq, col) + res.get(c);
                    sys.set(eq, col, cur);
                }
            }
            eq += 1;
        }
    }
    let flat = sys.solve(&rhs).ok_or_else(|| {
        Error::PostconditionFailed("no equivariant projection onto the Hom image exists".into())
    })?;
    let pi = LinearMap::from_flat(d, d, &flat);
    let kernel = pi.kernel();
    Ok(embed_all(i, &kernel))
}
