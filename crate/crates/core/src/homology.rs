//! Reduced simplicial homology of complexes and relative complexes, the
//! Reisner-type Cohen–Macaulay tests and depth via skeletons.

use std::fmt;

use crate::complex::{Face, RelativeComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::monomial::{IdealPair, Limits, Monomial};
use crate::rank::{is_prime, rank_mod_p, rank_rational, IntMatrix};

/// Prime used when a prime field is requested without a modulus.
pub const DEFAULT_PRIME: u64 = 32003;

/// Coefficients for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CoefficientField {
    #[default]
    Rationals,
    Prime(u64),
}

impl CoefficientField {
    /// `0` selects the rationals, a prime `p` selects `GF(p)`.
    pub fn from_characteristic(p: u64) -> Result<Self> {
        match p {
            0 => Ok(Self::Rationals),
            p if is_prime(p) => Ok(Self::Prime(p)),
            p => Err(Error::InvalidArgument(format!(
                "field characteristic {p} is not prime"
            ))),
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Self::Rationals => 0,
            Self::Prime(p) => *p,
        }
    }

    fn rank(&self, m: &IntMatrix) -> usize {
        match self {
            Self::Rationals => rank_rational(m),
            Self::Prime(p) => rank_mod_p(m, *p),
        }
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => f.write_str("QQ"),
            Self::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

/// The augmented chain complex spanned by a set of faces, with boundaries
/// taken modulo faces outside the set.
///
/// `groups[s]` holds the chain faces with `s` vertices, i.e. of dimension
/// `s - 1`, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    groups: Vec<Vec<Face>>,
}

impl ChainComplex {
    pub fn of_complex(complex: &SimplicialComplex) -> Self {
        Self::from_faces(complex.faces())
    }

    pub fn of_relative(psi: &RelativeComplex) -> Self {
        Self::from_faces(psi.faces())
    }

    fn from_faces(faces: Vec<Face>) -> Self {
        let top = faces.iter().map(|f| f.degree()).max().map_or(0, |d| d + 1);
        let mut groups = vec![Vec::new(); top];
        for f in faces {
            groups[f.degree()].push(f);
        }
        for g in &mut groups {
            g.sort_unstable();
        }
        Self { groups }
    }

    /// Chain faces with `size` vertices.
    pub fn group(&self, size: usize) -> &[Face] {
        self.groups.get(size).map_or(&[], Vec::as_slice)
    }

    /// Number of vertex-count levels, `max face size + 1`.
    pub fn levels(&self) -> usize {
        self.groups.len()
    }

    pub fn face_count(&self) -> usize {
        self.groups.iter().map(Vec::len).sum()
    }

    /// Matrix of `∂: C_{size} -> C_{size-1}`; rows index the smaller faces.
    ///
    /// Removing the vertex in sorted position `p` carries the sign `(-1)^p`.
    pub fn boundary_matrix(&self, size: usize) -> IntMatrix {
        let cols = self.group(size);
        let rows = if size == 0 { &[][..] } else { self.group(size - 1) };
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, &face) in cols.iter().enumerate() {
            for (pos, v) in face.vars().enumerate() {
                let sub = face.strip(Monomial::from_vars(&[v]));
                if let Ok(r) = rows.binary_search(&sub) {
                    m.set(r, c, if pos % 2 == 0 { 1 } else { -1 });
                }
            }
        }
        m
    }

    pub fn ranks(&self, field: CoefficientField) -> ChainComplexRanks {
        let levels = self.levels();
        // boundary_ranks[s] = rank of ∂ out of the faces with s vertices.
        let boundary_ranks: Vec<usize> = (0..=levels)
            .map(|s| {
                if s == 0 || s >= levels {
                    0
                } else {
                    field.rank(&self.boundary_matrix(s))
                }
            })
            .collect();
        let betti = (0..levels)
            .map(|s| self.group(s).len() - boundary_ranks[s] - boundary_ranks[s + 1])
            .collect();
        ChainComplexRanks {
            field,
            group_sizes: self.groups.iter().map(Vec::len).collect(),
            boundary_ranks,
            betti,
        }
    }
}

/// Ranks of an augmented chain complex and its reduced Betti numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexRanks {
    pub field: CoefficientField,
    /// `group_sizes[s] = dim C_{s-1}`.
    pub group_sizes: Vec<usize>,
    /// `boundary_ranks[s] = rank(∂: C_{s-1} -> C_{s-2})`.
    pub boundary_ranks: Vec<usize>,
    /// `betti[s] = β̃_{s-1}`.
    pub betti: Vec<usize>,
}

impl ChainComplexRanks {
    /// `β̃_i`, for `i >= -1`; zero above the top dimension.
    pub fn betti(&self, i: isize) -> usize {
        usize::try_from(i + 1)
            .ok()
            .and_then(|s| self.betti.get(s).copied())
            .unwrap_or(0)
    }

    /// Smallest `i < bound` with `β̃_i != 0`.
    pub fn first_nonzero_below(&self, bound: isize) -> Option<isize> {
        (-1..bound).find(|&i| self.betti(i) != 0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.iter().all(|&b| b == 0)
    }
}

fn check_budget(delta: &SimplicialComplex, limits: &Limits) -> Result<()> {
    limits.check_n(delta.ring().n())?;
    limits.check_faces(delta.face_count())
}

pub fn reduced_homology(
    complex: &SimplicialComplex,
    field: CoefficientField,
    limits: &Limits,
) -> Result<ChainComplexRanks> {
    if complex.is_void() {
        return Err(Error::InvalidArgument(
            "reduced homology of the void complex".into(),
        ));
    }
    check_budget(complex, limits)?;
    Ok(ChainComplex::of_complex(complex).ranks(field))
}

/// Homology of the chains on `Δ \ Γ`, boundaries taken modulo `Γ`.
pub fn relative_homology(
    psi: &RelativeComplex,
    field: CoefficientField,
    limits: &Limits,
) -> Result<ChainComplexRanks> {
    check_budget(psi.delta(), limits)?;
    Ok(ChainComplex::of_relative(psi).ranks(field))
}

/// A face whose link has nonvanishing homology in a degree that must vanish.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CmWitness {
    pub face: Face,
    pub degree: isize,
}

impl fmt::Display for CmWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let face: Vec<String> = self.face.vars().map(|v| v.to_string()).collect();
        write!(
            f,
            "reduced homology of the link of {{{}}} is nonzero in degree {}",
            face.join(","),
            self.degree
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CmVerdict {
    pub cohen_macaulay: bool,
    /// Krull dimension `d` the test was run against.
    pub dimension: usize,
    pub witness: Option<CmWitness>,
}

/// Reisner's criterion: `Δ` is Cohen–Macaulay iff for every face `F`
/// (including `∅`), `β̃_i(lk F) = 0` for all `i < dim lk F`.
pub fn is_cohen_macaulay(
    complex: &SimplicialComplex,
    field: CoefficientField,
    limits: &Limits,
) -> Result<CmVerdict> {
    if complex.is_void() {
        return Err(Error::InvalidArgument(
            "Cohen–Macaulay test of the void complex".into(),
        ));
    }
    check_budget(complex, limits)?;
    let dimension = complex.max_face_size();
    for face in complex.faces() {
        let link = complex.link(face)?;
        let top = link.dim().expect("links of faces are nonvoid");
        // Below dimension 1 only β̃_{-1} could be required to vanish, and it
        // does for any link with a vertex.
        if top <= 0 {
            continue;
        }
        let ranks = ChainComplex::of_complex(&link).ranks(field);
        if let Some(degree) = ranks.first_nonzero_below(top) {
            return Ok(CmVerdict {
                cohen_macaulay: false,
                dimension,
                witness: Some(CmWitness { face, degree }),
            });
        }
    }
    Ok(CmVerdict {
        cohen_macaulay: true,
        dimension,
        witness: None,
    })
}

/// Tests whether `K[Ψ]` has depth at least `target`: for every `F ∈ Δ`,
/// `H̃_i(lk_Δ F, lk_Γ F) = 0` for all `i < target - |F| - 1`.
fn relative_cm_at(
    psi: &RelativeComplex,
    target: usize,
    field: CoefficientField,
) -> Result<Option<CmWitness>> {
    for face in psi.delta().faces() {
        let bound = target as isize - face.degree() as isize - 1;
        if bound <= -1 {
            continue;
        }
        let link = psi.link(face)?;
        let ranks = ChainComplex::of_relative(&link).ranks(field);
        if let Some(degree) = ranks.first_nonzero_below(bound) {
            return Ok(Some(CmWitness { face, degree }));
        }
    }
    Ok(None)
}

/// Cohen–Macaulay test for `K[Ψ]` of dimension `d = dim Ψ + 1`, through the
/// relative homology of the link pairs `(lk_Δ F, lk_Γ F)`.
pub fn is_cm_relative(
    psi: &RelativeComplex,
    field: CoefficientField,
    limits: &Limits,
) -> Result<CmVerdict> {
    if psi.is_empty() {
        return Err(Error::InvalidArgument(
            "Cohen–Macaulay test of a relative complex without faces".into(),
        ));
    }
    check_budget(psi.delta(), limits)?;
    let dimension = psi.max_face_size();
    let witness = relative_cm_at(psi, dimension, field)?;
    Ok(CmVerdict {
        cohen_macaulay: witness.is_none(),
        dimension,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DepthReport {
    pub depth: usize,
    pub dim: usize,
    /// The Cohen–Macaulay test of the module itself.
    pub cm: CmVerdict,
    /// `true` when the absolute criterion on `Δ(I)` was used (`J = S`).
    pub absolute: bool,
}

/// `depth(K[Ψ]) = max{d' : Ψ_{≤d'-1} is Cohen–Macaulay}`.
pub fn depth_relative(
    psi: &RelativeComplex,
    field: CoefficientField,
    limits: &Limits,
) -> Result<DepthReport> {
    let cm = is_cm_relative(psi, field, limits)?;
    let dim = cm.dimension;
    if cm.cohen_macaulay {
        return Ok(DepthReport {
            depth: dim,
            dim,
            cm,
            absolute: false,
        });
    }
    let mut depth = 0;
    for d_prime in (1..dim).rev() {
        if relative_cm_at(&psi.skeleton(d_prime), d_prime, field)?.is_none() {
            depth = d_prime;
            break;
        }
    }
    Ok(DepthReport {
        depth,
        dim,
        cm,
        absolute: false,
    })
}

/// `depth(S/I) = max{d' : Δ_{≤d'-1} is Cohen–Macaulay}`.
pub fn depth_absolute(
    complex: &SimplicialComplex,
    field: CoefficientField,
    limits: &Limits,
) -> Result<DepthReport> {
    let cm = is_cohen_macaulay(complex, field, limits)?;
    let dim = cm.dimension;
    let mut depth = if cm.cohen_macaulay { dim } else { 0 };
    if !cm.cohen_macaulay {
        for d_prime in (1..dim).rev() {
            if is_cohen_macaulay(&complex.skeleton(d_prime), field, limits)?.cohen_macaulay {
                depth = d_prime;
                break;
            }
        }
    }
    Ok(DepthReport {
        depth,
        dim,
        cm,
        absolute: true,
    })
}

/// Depth of `J/I`: the absolute criterion on `Δ(I)` for `S/I`, the relative
/// one otherwise.
pub fn depth(pair: &IdealPair, field: CoefficientField, limits: &Limits) -> Result<DepthReport> {
    let psi = RelativeComplex::of_pair(pair, limits)?;
    if pair.is_quotient() {
        depth_absolute(psi.delta(), field, limits)
    } else {
        depth_relative(&psi, field, limits)
    }
}
