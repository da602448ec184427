//! Squarefree monomials, squarefree monomial ideals and ideal pairs.
//!
//! A squarefree monomial `x_A` is stored as the bitmask of its support `A`,
//! bit `i - 1` standing for the variable `x_i`. Products of squarefree
//! monomials are taken modulo squares, i.e. as mask unions.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported number of variables; masks fit one machine word.
pub const MAX_VARS: usize = 63;

/// Default bound on `n` for operations that enumerate all `2^n` subsets.
pub const DEFAULT_MAX_N: usize = 24;

/// Default bound on the number of faces handed to the homology routines.
pub const DEFAULT_MAX_FACES: usize = 20_000;

/// Resource limits for enumeration-based operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_n: usize,
    pub max_faces: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: DEFAULT_MAX_N,
            max_faces: DEFAULT_MAX_FACES,
        }
    }
}

impl Limits {
    pub fn check_n(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            return Err(Error::CapExceeded {
                what: "n",
                value: n,
                limit: self.max_n,
            });
        }
        Ok(())
    }

    pub fn check_faces(&self, faces: usize) -> Result<()> {
        if faces > self.max_faces {
            return Err(Error::CapExceeded {
                what: "face count",
                value: faces,
                limit: self.max_faces,
            });
        }
        Ok(())
    }
}

/// The polynomial ring `K[x_1, ..., x_n]`, reduced to its variable count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingContext {
    n: usize,
}

impl RingContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::BadRingSize(n));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Mask of the product of all variables.
    pub fn full_mask(&self) -> u64 {
        (1u64 << self.n) - 1
    }

    pub fn check_same(&self, other: &RingContext) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RingMismatch(self.n, other.n));
        }
        Ok(())
    }

    /// Every squarefree monomial of the ring, in mask order.
    pub fn all_monomials(&self) -> impl Iterator<Item = Monomial> {
        (0..=self.full_mask()).map(Monomial)
    }
}

/// A squarefree monomial, identified with its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const fn one() -> Self {
        Monomial(0)
    }

    pub const fn from_mask(mask: u64) -> Self {
        Monomial(mask)
    }

    /// Builds `x_{i_1} * ... * x_{i_r}` from 1-based variable indices.
    pub fn from_vars(vars: &[usize]) -> Self {
        Monomial(vars.iter().fold(0u64, |m, &i| {
            assert!((1..=MAX_VARS).contains(&i), "variable index {i} out of range");
            m | 1 << (i - 1)
        }))
    }

    pub const fn mask(self) -> u64 {
        self.0
    }

    pub const fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_one(self) -> bool {
        self.0 == 0
    }

    /// `self | other`.
    pub const fn divides(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn has_var(self, i: usize) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    /// Squarefree product, which is also the lcm.
    pub const fn lcm(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub const fn gcd(self, other: Monomial) -> Monomial {
        Monomial(self.0 & other.0)
    }

    /// `self / gcd(self, other)`: the generator of `(self) : other`.
    pub const fn strip(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    pub const fn is_coprime(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    /// 1-based indices of the variables in the support, ascending.
    pub fn vars(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i + 1)
        })
    }
}

/// Canonical order: by degree, then by mask value.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (pos, i) in self.vars().enumerate() {
            if pos > 0 {
                f.write_str("*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial({self})")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealKind {
    Zero,
    Unit,
    Proper,
}

/// A squarefree monomial ideal given by its minimal generators.
///
/// The generators form an antichain under divisibility and are kept in
/// canonical order. The zero ideal has no generators; the unit ideal has the
/// single generator `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: RingContext,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn zero(ring: RingContext) -> Self {
        Self {
            ring,
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: RingContext) -> Self {
        Self {
            ring,
            gens: vec![Monomial::one()],
        }
    }

    /// The ideal generated by `gens`, reduced to its minimal generators.
    ///
    /// Panics if a generator mentions a variable outside the ring.
    pub fn minimalize(ring: RingContext, gens: impl IntoIterator<Item = Monomial>) -> Self {
        let full = ring.full_mask();
        let mut sorted: Vec<Monomial> = gens
            .into_iter()
            .inspect(|g| {
                assert!(g.mask() & !full == 0, "generator {g} outside the ring");
            })
            .collect();
        sorted.sort_unstable();
        sorted.dedup();
        let mut kept: Vec<Monomial> = Vec::with_capacity(sorted.len());
        for g in sorted {
            // Sorted by degree, so only earlier entries can divide g.
            if !kept.iter().any(|h| h.divides(g)) {
                kept.push(g);
            }
        }
        Self { ring, gens: kept }
    }

    pub fn principal(ring: RingContext, g: Monomial) -> Self {
        Self::minimalize(ring, [g])
    }

    pub fn ring(&self) -> RingContext {
        self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn kind(&self) -> IdealKind {
        match self.gens.as_slice() {
            [] => IdealKind::Zero,
            [g] if g.is_one() => IdealKind::Unit,
            _ => IdealKind::Proper,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.kind() == IdealKind::Unit
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|&g| self.contains(g))
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let lcms = self
            .gens
            .iter()
            .flat_map(|&g| other.gens.iter().map(move |&h| g.lcm(h)));
        Ok(Self::minimalize(self.ring, lcms))
    }

    /// `(self : u)` for a single squarefree monomial `u`.
    pub fn colon_monomial(&self, u: Monomial) -> MonomialIdeal {
        Self::minimalize(self.ring, self.gens.iter().map(|&h| h.strip(u)))
    }

    /// `(self : other) = ⋂_{g ∈ G(other)} (self : g)`.
    pub fn colon(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.ring.check_same(&other.ring)?;
        let mut gens = other.gens.iter();
        let first = gens.next().ok_or(Error::ColonByZero)?;
        let mut acc = self.colon_monomial(*first);
        for &g in gens {
            if acc.is_zero() {
                break;
            }
            acc = acc.intersection(&self.colon_monomial(g))?;
        }
        Ok(acc)
    }

    /// Parses the ideal text format; see [`parse_ideal`].
    pub fn parse(text: &str, ring: RingContext) -> Result<MonomialIdeal> {
        parse_ideal(text, ring)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind() {
            IdealKind::Zero => f.write_str("zero"),
            IdealKind::Unit => f.write_str("unit"),
            IdealKind::Proper => {
                for (i, g) in self.gens.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{g}")?;
                }
                Ok(())
            }
        }
    }
}

/// A validated pair `I ⊊ J`, standing for the module `J/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealPair {
    lower: MonomialIdeal,
    upper: MonomialIdeal,
}

impl IdealPair {
    pub fn new(lower: MonomialIdeal, upper: MonomialIdeal) -> Result<Self> {
        lower.ring.check_same(&upper.ring)?;
        if !upper.contains_ideal(&lower) {
            return Err(Error::InvalidPair(format!(
                "lower ideal ({lower}) is not contained in upper ideal ({upper})"
            )));
        }
        if lower.contains_ideal(&upper) {
            return Err(Error::InvalidPair(format!(
                "lower and upper ideal coincide ({lower})"
            )));
        }
        Ok(Self { lower, upper })
    }

    /// `S/I`.
    pub fn quotient(ideal: MonomialIdeal) -> Result<Self> {
        let ring = ideal.ring;
        Self::new(ideal, MonomialIdeal::unit(ring))
    }

    /// `I` regarded as a module.
    pub fn ideal_module(ideal: MonomialIdeal) -> Result<Self> {
        let ring = ideal.ring;
        Self::new(MonomialIdeal::zero(ring), ideal)
    }

    pub fn ring(&self) -> RingContext {
        self.lower.ring
    }

    pub fn n(&self) -> usize {
        self.lower.ring.n
    }

    pub fn lower(&self) -> &MonomialIdeal {
        &self.lower
    }

    pub fn upper(&self) -> &MonomialIdeal {
        &self.upper
    }

    /// `x_A ∈ J \ I`, i.e. `A ∈ P_{J/I}`.
    pub fn in_module(&self, m: Monomial) -> bool {
        self.upper.contains(m) && !self.lower.contains(m)
    }

    pub fn is_quotient(&self) -> bool {
        self.upper.is_unit()
    }

    pub fn is_ideal_module(&self) -> bool {
        self.lower.is_zero()
    }

    /// For `S/I` returns the pair of `I`, for `I` the pair of `S/I`.
    pub fn companion(&self) -> Option<IdealPair> {
        if self.is_quotient() {
            IdealPair::ideal_module(self.lower.clone()).ok()
        } else if self.is_ideal_module() {
            IdealPair::quotient(self.upper.clone()).ok()
        } else {
            None
        }
    }
}

/// Parses one ideal: `zero`, `unit`, or a comma/whitespace separated list of
/// products `x<i>*x<j>*...` with 1-based indices. `#` starts a comment.
pub fn parse_ideal(text: &str, ring: RingContext) -> Result<MonomialIdeal> {
    parse_ideal_at(text, ring, 1, 1)
}

/// Like [`parse_ideal`], reporting positions relative to `(line, column)`.
pub(crate) fn parse_ideal_at(
    text: &str,
    ring: RingContext,
    line: usize,
    column: usize,
) -> Result<MonomialIdeal> {
    IdealParser::new(text, ring, line, column).parse()
}

struct IdealParser<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    ring: RingContext,
    line: usize,
    column: usize,
}

impl<'a> IdealParser<'a> {
    fn new(text: &'a str, ring: RingContext, line: usize, column: usize) -> Self {
        Self {
            chars: text.chars().peekable(),
            ring,
            line,
            column,
        }
    }

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    /// Skips whitespace and comments; separators too when `commas` is set.
    fn skip_blank(&mut self, commas: bool) {
        while let Some(&c) = self.chars.peek() {
            if c == '#' {
                while let Some(&c) = self.chars.peek() {
                    if c == '\n' {
                        break;
                    }
                    self.bump();
                }
            } else if c.is_whitespace() || (commas && c == ',') {
                self.bump();
            } else {
                break;
            }
        }
    }

    fn word(&mut self) -> String {
        let mut out = String::new();
        while let Some(&c) = self.chars.peek() {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.bump();
            } else {
                break;
            }
        }
        out
    }

    fn variable(&mut self) -> Result<usize> {
        let (line, column) = (self.line, self.column);
        let word = self.word();
        if word.is_empty() {
            let found = self
                .chars
                .peek()
                .map_or("end of input".to_string(), |c| format!("'{c}'"));
            return Err(self.error(line, column, format!("expected a variable, found {found}")));
        }
        let index = word
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()))
            .ok_or_else(|| self.error(line, column, format!("malformed variable '{word}'")))?;
        let i: usize = index
            .parse()
            .map_err(|_| self.error(line, column, format!("malformed variable '{word}'")))?;
        if i == 0 || i > self.ring.n() {
            return Err(self.error(
                line,
                column,
                format!("variable index {i} out of range 1..={}", self.ring.n()),
            ));
        }
        Ok(i)
    }

    fn product(&mut self) -> Result<Monomial> {
        let mut mask = 0u64;
        loop {
            let (line, column) = (self.line, self.column);
            let i = self.variable()?;
            if mask >> (i - 1) & 1 == 1 {
                return Err(self.error(
                    line,
                    column,
                    format!("non-squarefree product: x{i} repeated"),
                ));
            }
            mask |= 1 << (i - 1);
            self.skip_blank(false);
            if self.chars.peek() == Some(&'*') {
                self.bump();
                self.skip_blank(false);
            } else {
                return Ok(Monomial(mask));
            }
        }
    }

    fn parse(mut self) -> Result<MonomialIdeal> {
        self.skip_blank(true);
        let (line, column) = (self.line, self.column);
        let mut lookahead = self.chars.clone();
        let mut first = String::new();
        while let Some(c) = lookahead.next().filter(|c| c.is_ascii_alphanumeric()) {
            first.push(c);
        }
        if first == "zero" || first == "unit" {
            self.word();
            self.skip_blank(true);
            if self.chars.peek().is_some() {
                let (l, c) = (self.line, self.column);
                return Err(self.error(l, c, format!("unexpected input after '{first}'")));
            }
            return Ok(if first == "zero" {
                MonomialIdeal::zero(self.ring)
            } else {
                MonomialIdeal::unit(self.ring)
            });
        }
        let mut gens = Vec::new();
        while self.chars.peek().is_some() {
            gens.push(self.product()?);
            self.skip_blank(true);
        }
        if gens.is_empty() {
            return Err(self.error(line, column, "empty ideal; write 'zero' for the zero ideal"));
        }
        Ok(MonomialIdeal::minimalize(self.ring, gens))
    }
}
