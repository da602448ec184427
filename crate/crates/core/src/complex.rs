//! Simplicial complexes and relative simplicial complexes stored by their
//! facets, together with the Stanley–Reisner dictionary.
//!
//! Faces are vertex sets over `[n]` and reuse [`Monomial`] as their bitmask
//! representation, so the face `F` and the monomial `x_F` coincide.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::monomial::{IdealPair, Limits, Monomial, MonomialIdeal, RingContext};

pub type Face = Monomial;

/// Keeps the inclusion-maximal sets, in canonical order.
fn maximal_sets(mut sets: Vec<Face>) -> Vec<Face> {
    sets.sort_unstable();
    sets.dedup();
    // Descending order: distinct sets of equal size never contain each
    // other, so only the strictly larger prefix of `kept` needs checking.
    let mut kept: Vec<Face> = Vec::with_capacity(sets.len());
    let mut larger = 0;
    for s in sets.into_iter().rev() {
        if kept.last().is_some_and(|k| k.degree() > s.degree()) {
            larger = kept.len();
        }
        if !kept[..larger].iter().any(|k| s.divides(*k)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Visits every submask of `mask`, including `0` and `mask` itself.
fn for_each_submask(mask: u64, mut visit: impl FnMut(u64)) {
    let mut sub = mask;
    loop {
        visit(sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & mask;
    }
}

/// Visits every `size`-element submask of `mask`.
fn for_each_sized_submask(mask: u64, size: usize, mut visit: impl FnMut(u64)) {
    let bits: Vec<u64> = Monomial::from_mask(mask)
        .vars()
        .map(|i| 1u64 << (i - 1))
        .collect();
    if size > bits.len() {
        return;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        visit(idx.iter().fold(0, |acc, &i| acc | bits[i]));
        // Advance to the next combination in lexicographic order.
        let Some(pos) = (0..size).rev().find(|&p| idx[p] < p + bits.len() - size) else {
            return;
        };
        idx[pos] += 1;
        for k in pos + 1..size {
            idx[k] = idx[k - 1] + 1;
        }
    }
}

/// Face counts by dimension, `entries[i + 1] = f_i` for `-1 <= i <= d - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    entries: Vec<u64>,
}

impl FVector {
    pub fn new(entries: Vec<u64>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    /// `f_i`; zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        usize::try_from(i + 1)
            .ok()
            .and_then(|k| self.entries.get(k).copied())
            .unwrap_or(0)
    }

    /// `d = dim + 1`, the number of entries minus one.
    pub fn d(&self) -> usize {
        self.entries.len().saturating_sub(1)
    }
}

/// A simplicial complex on the vertex set `[n]`, stored by its facets.
///
/// An empty facet list is the void complex, which has no faces at all; the
/// complex `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    ring: RingContext,
    facets: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex generated by `faces`; only maximal ones are kept.
    pub fn from_facets(ring: RingContext, faces: impl IntoIterator<Item = Face>) -> Self {
        let full = ring.full_mask();
        let faces: Vec<Face> = faces
            .into_iter()
            .inspect(|f| assert!(f.mask() & !full == 0, "face {f} outside the vertex set"))
            .collect();
        Self {
            ring,
            facets: maximal_sets(faces),
        }
    }

    pub fn void(ring: RingContext) -> Self {
        Self {
            ring,
            facets: Vec::new(),
        }
    }

    /// The full simplex on the vertices of `face`.
    pub fn simplex(ring: RingContext, face: Face) -> Self {
        Self::from_facets(ring, [face])
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Largest face size `d`, so that `dim = d - 1`; zero for void and `{∅}`.
    pub fn max_face_size(&self) -> usize {
        self.facets.iter().map(|f| f.degree()).max().unwrap_or(0)
    }

    /// `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        (!self.is_void()).then(|| self.max_face_size() as isize - 1)
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.divides(*f))
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|&f| other.contains_face(f))
    }

    /// All faces in canonical order (size, then mask).
    pub fn faces(&self) -> Vec<Face> {
        let mut seen = HashSet::new();
        for &facet in &self.facets {
            for_each_submask(facet.mask(), |sub| {
                seen.insert(sub);
            });
        }
        let mut out: Vec<Face> = seen.into_iter().map(Monomial::from_mask).collect();
        out.sort_unstable();
        out
    }

    pub fn face_count(&self) -> usize {
        self.f_vector().entries().iter().sum::<u64>() as usize
    }

    pub fn f_vector(&self) -> FVector {
        let mut entries = vec![0u64; self.max_face_size() + 1];
        if self.is_void() {
            return FVector::new(Vec::new());
        }
        for face in self.faces() {
            entries[face.degree()] += 1;
        }
        FVector::new(entries)
    }

    /// The `(d' - 1)`-skeleton: all faces with at most `d'` vertices.
    pub fn skeleton(&self, d_prime: usize) -> SimplicialComplex {
        let mut faces = Vec::new();
        for &f in &self.facets {
            if f.degree() <= d_prime {
                faces.push(f);
            } else {
                for_each_sized_submask(f.mask(), d_prime, |m| faces.push(Monomial::from_mask(m)));
            }
        }
        Self::from_facets(self.ring, faces)
    }

    /// `lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}`.
    pub fn link(&self, face: Face) -> Result<SimplicialComplex> {
        if !self.contains_face(face) {
            return Err(Error::NotAFace(face.to_string()));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| face.divides(**f))
            .map(|f| f.strip(face));
        Ok(Self::from_facets(self.ring, facets))
    }

    /// The complex with the facet `facet` removed (its boundary is kept).
    pub fn without_facet(&self, facet: Face) -> Result<SimplicialComplex> {
        if !self.facets.contains(&facet) {
            return Err(Error::NotAFace(format!("{facet} (as a facet)")));
        }
        let mut faces: Vec<Face> = self.facets.iter().copied().filter(|&f| f != facet).collect();
        if facet.is_one() {
            return Ok(Self::from_facets(self.ring, faces));
        }
        faces.extend(facet.vars().map(|i| facet.strip(Monomial::from_vars(&[i]))));
        Ok(Self::from_facets(self.ring, faces))
    }
}

/// `Δ(I) = {A ⊆ [n] : x_A ∉ I}`; the unit ideal gives the void complex.
pub(crate) fn stanley_reisner_complex(
    ideal: &MonomialIdeal,
    limits: &Limits,
) -> Result<SimplicialComplex> {
    let ring = ideal.ring();
    limits.check_n(ring.n())?;
    if ideal.is_unit() {
        return Ok(SimplicialComplex::void(ring));
    }
    let n = ring.n();
    // A is a facet iff it avoids I and every one-vertex extension lands in I.
    let facets: Vec<Face> = ring
        .all_monomials()
        .filter(|&a| {
            !ideal.contains(a)
                && (1..=n)
                    .filter(|&i| !a.has_var(i))
                    .all(|i| ideal.contains(a.lcm(Monomial::from_vars(&[i]))))
        })
        .collect();
    Ok(SimplicialComplex::from_facets(ring, facets))
}

/// The Stanley–Reisner complex of a proper ideal.
pub fn complex_of_ideal(ideal: &MonomialIdeal, limits: &Limits) -> Result<SimplicialComplex> {
    if ideal.is_unit() {
        return Err(Error::VoidComplex);
    }
    stanley_reisner_complex(ideal, limits)
}

/// The Stanley–Reisner ideal, generated by the minimal non-faces.
///
/// The void complex maps to the unit ideal.
pub fn ideal_of_complex(complex: &SimplicialComplex, limits: &Limits) -> Result<MonomialIdeal> {
    let ring = complex.ring();
    limits.check_n(ring.n())?;
    if complex.is_void() {
        return Ok(MonomialIdeal::unit(ring));
    }
    let gens = ring.all_monomials().filter(|&a| {
        !complex.contains_face(a)
            && a
                .vars()
                .all(|i| complex.contains_face(a.strip(Monomial::from_vars(&[i]))))
    });
    Ok(MonomialIdeal::minimalize(ring, gens))
}

/// A relative simplicial complex `Ψ = (Δ, Γ)` with `Γ ⊆ Δ`; its faces are
/// `Δ \ Γ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelativeComplex {
    delta: SimplicialComplex,
    gamma: SimplicialComplex,
}

impl RelativeComplex {
    pub fn new(delta: SimplicialComplex, gamma: SimplicialComplex) -> Result<Self> {
        delta.ring.check_same(&gamma.ring)?;
        if !gamma.is_subcomplex_of(&delta) {
            return Err(Error::InvalidArgument(
                "relative complex requires Γ ⊆ Δ".to_string(),
            ));
        }
        Ok(Self { delta, gamma })
    }

    /// `(Δ, void)`, whose faces are all faces of `Δ`.
    pub fn absolute(delta: SimplicialComplex) -> Self {
        let gamma = SimplicialComplex::void(delta.ring);
        Self { delta, gamma }
    }

    /// `Ψ = (Δ(I), Δ(J))` for the module `J/I`.
    pub fn of_pair(pair: &IdealPair, limits: &Limits) -> Result<Self> {
        let delta = stanley_reisner_complex(pair.lower(), limits)?;
        let gamma = stanley_reisner_complex(pair.upper(), limits)?;
        Self::new(delta, gamma)
    }

    pub fn ring(&self) -> RingContext {
        self.delta.ring
    }

    pub fn delta(&self) -> &SimplicialComplex {
        &self.delta
    }

    pub fn gamma(&self) -> &SimplicialComplex {
        &self.gamma
    }

    pub fn contains_face(&self, face: Face) -> bool {
        self.delta.contains_face(face) && !self.gamma.contains_face(face)
    }

    /// Faces of `Δ \ Γ` in canonical order.
    pub fn faces(&self) -> Vec<Face> {
        self.delta
            .faces()
            .into_iter()
            .filter(|&f| !self.gamma.contains_face(f))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.delta.facets.iter().all(|&f| self.gamma.contains_face(f))
    }

    /// Inclusion-maximal faces of `Δ \ Γ`.
    ///
    /// Every such face is a facet of `Δ`: a proper coface in `Δ` cannot lie
    /// in `Γ`.
    pub fn facets(&self) -> Vec<Face> {
        self.delta
            .facets
            .iter()
            .copied()
            .filter(|&f| !self.gamma.contains_face(f))
            .collect()
    }

    pub fn max_face_size(&self) -> usize {
        self.facets().iter().map(|f| f.degree()).max().unwrap_or(0)
    }

    /// `None` when `Ψ` has no faces.
    pub fn dim(&self) -> Option<isize> {
        (!self.is_empty()).then(|| self.max_face_size() as isize - 1)
    }

    /// `f_i(Ψ) = f_i(Δ) - f_i(Γ)`, padded to the length of `Δ`'s vector
    /// and trimmed to `dim Ψ + 2` entries.
    pub fn f_vector(&self) -> FVector {
        let fd = self.delta.f_vector();
        let fg = self.gamma.f_vector();
        let mut entries: Vec<u64> = fd
            .entries()
            .iter()
            .enumerate()
            .map(|(k, &a)| a - fg.entries().get(k).copied().unwrap_or(0))
            .collect();
        let len = if self.is_empty() { 0 } else { self.max_face_size() + 1 };
        entries.truncate(len);
        FVector::new(entries)
    }

    /// `Ψ_{≤d'-1} = (Δ_{≤d'-1}, Γ_{≤d'-1})`.
    pub fn skeleton(&self, d_prime: usize) -> RelativeComplex {
        Self {
            delta: self.delta.skeleton(d_prime),
            gamma: self.gamma.skeleton(d_prime),
        }
    }

    /// `(lk_Δ F, lk_Γ F)`; the second entry is void when `F ∉ Γ`.
    pub fn link(&self, face: Face) -> Result<RelativeComplex> {
        let delta = self.delta.link(face)?;
        let gamma = if self.gamma.contains_face(face) {
            self.gamma.link(face)?
        } else {
            SimplicialComplex::void(self.ring())
        };
        Ok(Self { delta, gamma })
    }

    /// `(Δ \ {F}, Γ)` for a top-dimensional face `F` of `Ψ`.
    pub fn without_facet(&self, facet: Face) -> Result<RelativeComplex> {
        if !self.contains_face(facet) {
            return Err(Error::NotAFace(facet.to_string()));
        }
        Self::new(self.delta.without_facet(facet)?, self.gamma.clone())
    }
}
