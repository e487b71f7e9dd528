//! Exact set-function algebra and polyhedral membership.
//!
//! Set functions are table-backed over all 2^n subsets with exact rational
//! values; polyhedra are lists of subset constraints checked exhaustively.
//! No floating point enters anywhere, so membership answers never depend on
//! a tolerance.

use num_rational::Rational64;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::ground::ElementSet;
use crate::matroid::Matroid;

pub type Rational = Rational64;

/// Hard cap on ground-set size for table-backed set functions.
pub const SET_FUNCTION_CAP: usize = 20;

/// Ground-set size up to which modularity re-verification (for truncations)
/// runs exhaustively.
const MODULARITY_CHECK_CAP: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Modularity {
    Submodular,
    Supermodular,
    Unknown,
}

/// An exact set function on all subsets of {0,..,n−1} with f(∅) = 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFunction {
    n: usize,
    values: Vec<Rational>,
    modularity: Modularity,
}

impl SetFunction {
    pub fn from_fn(
        n: usize,
        f: impl Fn(ElementSet) -> Rational,
        modularity: Modularity,
    ) -> Self {
        assert!(n <= SET_FUNCTION_CAP, "set function cap is n <= {}", SET_FUNCTION_CAP);
        let values: Vec<Rational> = (0..1u64 << n).map(|bits| f(ElementSet::from_bits(bits))).collect();
        assert!(values[0].is_zero(), "set function must vanish on the empty set");
        SetFunction { n, values, modularity }
    }

    pub fn from_fn_int(n: usize, f: impl Fn(ElementSet) -> i64, modularity: Modularity) -> Self {
        Self::from_fn(n, |x| Rational::from_integer(f(x)), modularity)
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::zero(), Modularity::Submodular)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn modularity(&self) -> Modularity {
        self.modularity
    }

    pub fn value(&self, x: ElementSet) -> Rational {
        self.values[x.bits() as usize]
    }

    pub fn ground_value(&self) -> Rational {
        self.values[(1usize << self.n) - 1]
    }

    fn full(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Exhaustive submodularity test: f(X)+f(Y) ≥ f(X∪Y)+f(X∩Y) for all pairs.
    pub fn is_submodular(&self) -> bool {
        let size = 1usize << self.n;
        for x in 0..size {
            for y in 0..x {
                if self.values[x] + self.values[y]
                    < self.values[x | y] + self.values[x & y]
                {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_supermodular(&self) -> bool {
        let size = 1usize << self.n;
        for x in 0..size {
            for y in 0..x {
                if self.values[x] + self.values[y]
                    > self.values[x | y] + self.values[x & y]
                {
                    return false;
                }
            }
        }
        true
    }

    /// Dual function h^#(X) = h(E) − h(E∖X). Submodular functions map to
    /// supermodular ones and vice versa; applying the operation twice gives
    /// back the original table.
    pub fn dual_supermodular(&self) -> SetFunction {
        let total = self.ground_value();
        let full = self.full();
        let values: Vec<Rational> = (0..1u64 << self.n)
            .map(|bits| total - self.values[(full.difference(ElementSet::from_bits(bits))).bits() as usize])
            .collect();
        let modularity = match self.modularity {
            Modularity::Submodular => Modularity::Supermodular,
            Modularity::Supermodular => Modularity::Submodular,
            Modularity::Unknown => Modularity::Unknown,
        };
        SetFunction { n: self.n, values, modularity }
    }

    /// α-truncation: shift only the ground-set value, down for submodular
    /// mode and up for supermodular mode. The modularity tag is kept only if
    /// it still verifies; otherwise the result is tagged unknown.
    pub fn truncate(&self, alpha: Rational, mode: TruncationMode) -> SetFunction {
        assert!(alpha >= Rational::zero(), "truncation needs alpha >= 0");
        let mut values = self.values.clone();
        let last = values.len() - 1;
        match mode {
            TruncationMode::Submodular => values[last] -= alpha,
            TruncationMode::Supermodular => values[last] += alpha,
        }
        let mut out = SetFunction { n: self.n, values, modularity: self.modularity };
        if out.modularity != Modularity::Unknown {
            if self.n <= MODULARITY_CHECK_CAP {
                let still_ok = match out.modularity {
                    Modularity::Submodular => out.is_submodular(),
                    Modularity::Supermodular => out.is_supermodular(),
                    Modularity::Unknown => true,
                };
                if !still_ok {
                    eprintln!("warning: truncation no longer {:?}; tagging unknown", out.modularity);
                    out.modularity = Modularity::Unknown;
                }
            } else {
                eprintln!(
                    "warning: truncation modularity not re-verified for n={} > {}; tagging unknown",
                    self.n, MODULARITY_CHECK_CAP
                );
                out.modularity = Modularity::Unknown;
            }
        }
        out
    }

    /// Tightened function f^u(X) = min{f(Y) + u(X∖Y) : Y ⊆ X}; by Fact 1,
    /// P(f^u) = {x ∈ P(f) : x ≤ u}.
    pub fn tightened_upper(&self, u: &[Option<Rational>]) -> SetFunction {
        assert_eq!(u.len(), self.n);
        let values: Vec<Rational> = (0..1u64 << self.n)
            .map(|bits| {
                let x = ElementSet::from_bits(bits);
                let mut best: Option<Rational> = None;
                for y in x.subsets() {
                    let Some(rest) = bounded_sum(u, x.difference(y)) else { continue };
                    let candidate = self.values[y.bits() as usize] + rest;
                    best = Some(match best {
                        Some(b) if b <= candidate => b,
                        _ => candidate,
                    });
                }
                best.expect("Y = X always yields a finite value")
            })
            .collect();
        SetFunction { n: self.n, values, modularity: Modularity::Submodular }
    }

    /// Dual tightening g_l(X) = max{g(Y) + l(X∖Y) : Y ⊆ X}; by Fact 2,
    /// P(g_l) = {x ∈ P(g) : x ≥ l}.
    pub fn tightened_lower(&self, l: &[Option<Rational>]) -> SetFunction {
        assert_eq!(l.len(), self.n);
        let values: Vec<Rational> = (0..1u64 << self.n)
            .map(|bits| {
                let x = ElementSet::from_bits(bits);
                let mut best: Option<Rational> = None;
                for y in x.subsets() {
                    let Some(rest) = bounded_sum(l, x.difference(y)) else { continue };
                    let candidate = self.values[y.bits() as usize] + rest;
                    best = Some(match best {
                        Some(b) if b >= candidate => b,
                        _ => candidate,
                    });
                }
                best.expect("Y = X always yields a finite value")
            })
            .collect();
        SetFunction { n: self.n, values, modularity: Modularity::Supermodular }
    }
}

fn bounded_sum(bounds: &[Option<Rational>], over: ElementSet) -> Option<Rational> {
    let mut total = Rational::zero();
    for e in over.iter() {
        total += bounds[e]?;
    }
    Some(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TruncationMode {
    Submodular,
    Supermodular,
}

/// An exact rational vector indexed by ground-set elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPoint {
    coords: Vec<Rational>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint { coords }
    }

    pub fn zeros(n: usize) -> Self {
        RationalPoint { coords: vec![Rational::zero(); n] }
    }

    pub fn uniform(n: usize, value: Rational) -> Self {
        RationalPoint { coords: vec![value; n] }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        RationalPoint { coords: values.iter().map(|&v| Rational::from_integer(v)).collect() }
    }

    /// χ_X as a point of ℝ^n.
    pub fn characteristic(x: ElementSet, n: usize) -> Self {
        RationalPoint {
            coords: (0..n)
                .map(|i| if x.contains(i) { Rational::one() } else { Rational::zero() })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coord(&self, i: usize) -> Rational {
        self.coords[i]
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// x(X) = Σ_{e∈X} x(e).
    pub fn sum_over(&self, x: ElementSet) -> Rational {
        x.iter().map(|e| self.coords[e]).sum()
    }

    pub fn total(&self) -> Rational {
        self.coords.iter().copied().sum()
    }

    /// When every coordinate is 0 or 1, the corresponding subset.
    pub fn as_characteristic(&self) -> Option<ElementSet> {
        let mut s = ElementSet::empty();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_one() {
                s.insert(i);
            } else if !c.is_zero() {
                return None;
            }
        }
        Some(s)
    }
}

/// One constraint block of a polyhedron description.
#[derive(Debug, Clone)]
pub enum Constraint {
    /// x(X) ≤ f(X) for every X.
    SubmodularUpper(SetFunction),
    /// x(X) ≥ g(X) for every X.
    SupermodularLower(SetFunction),
    /// x ∈ P(f) and x(E) = f(E).
    SubmodularBase(SetFunction),
    /// x ∈ P(g) and x(E) = g(E).
    SupermodularBase(SetFunction),
    /// l ≤ x ≤ u componentwise; None means unbounded.
    Box {
        lower: Vec<Option<Rational>>,
        upper: Vec<Option<Rational>>,
    },
    /// α ≤ x(E) ≤ β.
    SumWindow { lo: Rational, hi: Rational },
}

/// A violated constraint, reported exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    SetUpper { constraint: usize, set: ElementSet, bound: Rational, value: Rational },
    SetLower { constraint: usize, set: ElementSet, bound: Rational, value: Rational },
    BaseSum { constraint: usize, expected: Rational, value: Rational },
    BoxLower { constraint: usize, element: usize, bound: Rational, value: Rational },
    BoxUpper { constraint: usize, element: usize, bound: Rational, value: Rational },
    WindowLow { constraint: usize, bound: Rational, value: Rational },
    WindowHigh { constraint: usize, bound: Rational, value: Rational },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::SetUpper { set, bound, value, .. } => {
                write!(f, "x({}) = {} exceeds upper bound {}", set, value, bound)
            }
            Violation::SetLower { set, bound, value, .. } => {
                write!(f, "x({}) = {} is below lower bound {}", set, value, bound)
            }
            Violation::BaseSum { expected, value, .. } => {
                write!(f, "x(E) = {} differs from base value {}", value, expected)
            }
            Violation::BoxLower { element, bound, value, .. } => {
                write!(f, "x({}) = {} is below {}", element, value, bound)
            }
            Violation::BoxUpper { element, bound, value, .. } => {
                write!(f, "x({}) = {} exceeds {}", element, value, bound)
            }
            Violation::WindowLow { bound, value, .. } => {
                write!(f, "x(E) = {} is below window bound {}", value, bound)
            }
            Violation::WindowHigh { bound, value, .. } => {
                write!(f, "x(E) = {} exceeds window bound {}", value, bound)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Membership {
    Member,
    Violated(Violation),
}

impl Membership {
    pub fn is_member(&self) -> bool {
        matches!(self, Membership::Member)
    }
}

/// A finite intersection of subset constraints over one ground set.
#[derive(Debug, Clone, Default)]
pub struct PolyhedronDescription {
    n: usize,
    constraints: Vec<Constraint>,
}

impl PolyhedronDescription {
    pub fn new(n: usize) -> Self {
        PolyhedronDescription { n, constraints: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn submodular(f: SetFunction) -> Self {
        let n = f.n();
        PolyhedronDescription { n, constraints: vec![Constraint::SubmodularUpper(f)] }
    }

    pub fn supermodular(g: SetFunction) -> Self {
        let n = g.n();
        PolyhedronDescription { n, constraints: vec![Constraint::SupermodularLower(g)] }
    }

    /// Base polyhedron B(h); the side of the subset constraints follows the
    /// modularity tag of `h`.
    pub fn base(h: SetFunction) -> Result<Self, Error> {
        let n = h.n();
        let constraint = match h.modularity() {
            Modularity::Submodular => Constraint::SubmodularBase(h),
            Modularity::Supermodular => Constraint::SupermodularBase(h),
            Modularity::Unknown => {
                return Err(Error::InvalidBounds(
                    "base polyhedron needs a submodular or supermodular tag".into(),
                ))
            }
        };
        Ok(PolyhedronDescription { n, constraints: vec![constraint] })
    }

    fn check_dim(&self, other_n: usize) -> Result<(), Error> {
        if self.n != other_n {
            return Err(Error::DimensionMismatch { expected: self.n, got: other_n });
        }
        Ok(())
    }

    pub fn intersect_submodular(mut self, f: SetFunction) -> Result<Self, Error> {
        self.check_dim(f.n())?;
        self.constraints.push(Constraint::SubmodularUpper(f));
        Ok(self)
    }

    pub fn intersect_supermodular(mut self, g: SetFunction) -> Result<Self, Error> {
        self.check_dim(g.n())?;
        self.constraints.push(Constraint::SupermodularLower(g));
        Ok(self)
    }

    /// Intersect with the box l ≤ x ≤ u.
    pub fn intersect_box(
        mut self,
        lower: Vec<Option<Rational>>,
        upper: Vec<Option<Rational>>,
    ) -> Result<Self, Error> {
        self.check_dim(lower.len())?;
        self.check_dim(upper.len())?;
        for i in 0..self.n {
            if let (Some(l), Some(u)) = (lower[i], upper[i]) {
                if l > u {
                    return Err(Error::InvalidBounds(format!(
                        "l({}) = {} exceeds u({}) = {}",
                        i, l, i, u
                    )));
                }
            }
        }
        self.constraints.push(Constraint::Box { lower, upper });
        Ok(self)
    }

    /// Intersect with the sum window α ≤ x(E) ≤ β.
    pub fn window(mut self, lo: Rational, hi: Rational) -> Result<Self, Error> {
        if lo > hi {
            return Err(Error::InvalidWindow { lo: lo.to_string(), hi: hi.to_string() });
        }
        self.constraints.push(Constraint::SumWindow { lo, hi });
        Ok(self)
    }

    /// Concatenate the constraints of two descriptions over one ground set.
    pub fn intersect(mut self, other: PolyhedronDescription) -> Result<Self, Error> {
        self.check_dim(other.n)?;
        self.constraints.extend(other.constraints);
        Ok(self)
    }

    /// Exact membership check. Constraints are scanned in order; within a
    /// set-function constraint the subsets are scanned in colex order, and
    /// the first violation found is reported as the certificate.
    pub fn membership(&self, x: &RationalPoint) -> Result<Membership, Error> {
        self.check_dim(x.len())?;
        let sums = subset_sums(x);
        let full = (1usize << self.n) - 1;
        for (ci, constraint) in self.constraints.iter().enumerate() {
            match constraint {
                Constraint::SubmodularUpper(f) => {
                    if let Some(v) = scan_upper(ci, f, &sums) {
                        return Ok(Membership::Violated(v));
                    }
                }
                Constraint::SupermodularLower(g) => {
                    if let Some(v) = scan_lower(ci, g, &sums) {
                        return Ok(Membership::Violated(v));
                    }
                }
                Constraint::SubmodularBase(f) => {
                    if let Some(v) = scan_upper(ci, f, &sums) {
                        return Ok(Membership::Violated(v));
                    }
                    if sums[full] != f.ground_value() {
                        return Ok(Membership::Violated(Violation::BaseSum {
                            constraint: ci,
                            expected: f.ground_value(),
                            value: sums[full],
                        }));
                    }
                }
                Constraint::SupermodularBase(g) => {
                    if let Some(v) = scan_lower(ci, g, &sums) {
                        return Ok(Membership::Violated(v));
                    }
                    if sums[full] != g.ground_value() {
                        return Ok(Membership::Violated(Violation::BaseSum {
                            constraint: ci,
                            expected: g.ground_value(),
                            value: sums[full],
                        }));
                    }
                }
                Constraint::Box { lower, upper } => {
                    for e in 0..self.n {
                        let xe = x.coord(e);
                        if let Some(l) = lower[e] {
                            if xe < l {
                                return Ok(Membership::Violated(Violation::BoxLower {
                                    constraint: ci,
                                    element: e,
                                    bound: l,
                                    value: xe,
                                }));
                            }
                        }
                        if let Some(u) = upper[e] {
                            if xe > u {
                                return Ok(Membership::Violated(Violation::BoxUpper {
                                    constraint: ci,
                                    element: e,
                                    bound: u,
                                    value: xe,
                                }));
                            }
                        }
                    }
                }
                Constraint::SumWindow { lo, hi } => {
                    let total = sums[full];
                    if total < *lo {
                        return Ok(Membership::Violated(Violation::WindowLow {
                            constraint: ci,
                            bound: *lo,
                            value: total,
                        }));
                    }
                    if total > *hi {
                        return Ok(Membership::Violated(Violation::WindowHigh {
                            constraint: ci,
                            bound: *hi,
                            value: total,
                        }));
                    }
                }
            }
        }
        Ok(Membership::Member)
    }

    /// Specialized membership test for a characteristic vector χ_X, using
    /// popcounts instead of rational sums. Agrees with [`Self::membership`] on
    /// such points.
    pub fn contains_characteristic(&self, x: ElementSet) -> bool {
        assert!(x.is_subset_of(ElementSet::full(self.n)));
        for constraint in &self.constraints {
            match constraint {
                Constraint::SubmodularUpper(f) | Constraint::SubmodularBase(f) => {
                    for (bits, value) in f.values.iter().enumerate() {
                        let inter = x.bits() & bits as u64;
                        if Rational::from_integer(inter.count_ones() as i64) > *value {
                            return false;
                        }
                    }
                    if matches!(constraint, Constraint::SubmodularBase(_))
                        && Rational::from_integer(x.len() as i64) != f.ground_value()
                    {
                        return false;
                    }
                }
                Constraint::SupermodularLower(g) | Constraint::SupermodularBase(g) => {
                    for (bits, value) in g.values.iter().enumerate() {
                        let inter = x.bits() & bits as u64;
                        if Rational::from_integer(inter.count_ones() as i64) < *value {
                            return false;
                        }
                    }
                    if matches!(constraint, Constraint::SupermodularBase(_))
                        && Rational::from_integer(x.len() as i64) != g.ground_value()
                    {
                        return false;
                    }
                }
                Constraint::Box { lower, upper } => {
                    for e in 0..self.n {
                        let xe = if x.contains(e) { Rational::one() } else { Rational::zero() };
                        if lower[e].is_some_and(|l| xe < l) {
                            return false;
                        }
                        if upper[e].is_some_and(|u| xe > u) {
                            return false;
                        }
                    }
                }
                Constraint::SumWindow { lo, hi } => {
                    let total = Rational::from_integer(x.len() as i64);
                    if total < *lo || total > *hi {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// All subset sums of x, indexed by bitmask.
fn subset_sums(x: &RationalPoint) -> Vec<Rational> {
    let n = x.len();
    let mut sums = vec![Rational::zero(); 1 << n];
    for bits in 1usize..1 << n {
        let low = bits.trailing_zeros() as usize;
        sums[bits] = sums[bits & (bits - 1)] + x.coord(low);
    }
    sums
}

fn scan_upper(ci: usize, f: &SetFunction, sums: &[Rational]) -> Option<Violation> {
    for (bits, value) in f.values.iter().enumerate() {
        if sums[bits] > *value {
            return Some(Violation::SetUpper {
                constraint: ci,
                set: ElementSet::from_bits(bits as u64),
                bound: *value,
                value: sums[bits],
            });
        }
    }
    None
}

fn scan_lower(ci: usize, g: &SetFunction, sums: &[Rational]) -> Option<Violation> {
    for (bits, value) in g.values.iter().enumerate() {
        if sums[bits] < *value {
            return Some(Violation::SetLower {
                constraint: ci,
                set: ElementSet::from_bits(bits as u64),
                bound: *value,
                value: sums[bits],
            });
        }
    }
    None
}

/// The generalized-polymatroid condition on a pair (f, g):
/// f(X) − g(Y) ≥ f(X∖Y) − g(Y∖X) for all X, Y.
pub fn is_gpolymatroid_pair(f: &SetFunction, g: &SetFunction) -> bool {
    assert_eq!(f.n(), g.n(), "set functions must share one ground set");
    let size = 1u64 << f.n();
    for x in 0..size {
        for y in 0..size {
            let x_minus_y = x & !y;
            let y_minus_x = y & !x;
            if f.values[x as usize] - g.values[y as usize]
                < f.values[x_minus_y as usize] - g.values[y_minus_x as usize]
            {
                return false;
            }
        }
    }
    true
}

/// Lift of a generalized polymatroid Q(f, g) to a base polyhedron over
/// E ∪ {ê}: the new element has index n, and
///   f̂(X) = f(X)            for ê ∉ X,
///   f̂(X) = t − g(Ê∖X)      for ê ∈ X.
/// The projection of B(f̂) along ê equals Q(f, g) for every t.
pub fn lift_gpolymatroid(f: &SetFunction, g: &SetFunction, t: Rational) -> SetFunction {
    assert!(is_gpolymatroid_pair(f, g), "lift needs a generalized-polymatroid pair");
    let n = f.n();
    let full_hat = ElementSet::full(n + 1);
    SetFunction::from_fn(
        n + 1,
        |x| {
            if x.contains(n) {
                t - g.value(full_hat.difference(x).without(n))
            } else {
                f.value(x)
            }
        },
        Modularity::Submodular,
    )
}

/// Project a point of ℝ^E into B(f̂): the ê-coordinate is forced to
/// t − x(E) by the base equality, so membership of the lifted point is a
/// direct check.
pub fn lift_projection_contains(fhat: &SetFunction, x: &RationalPoint) -> bool {
    let n = x.len();
    assert_eq!(fhat.n(), n + 1);
    let missing = fhat.ground_value() - x.total();
    let mut coords = x.coords().to_vec();
    coords.push(missing);
    let lifted = RationalPoint::new(coords);
    PolyhedronDescription::base(fhat.clone())
        .expect("lift is tagged submodular")
        .membership(&lifted)
        .expect("dimensions agree")
        .is_member()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatroidSetFunctionKind {
    /// ρ, submodular.
    Rank,
    /// ρ^#, supermodular; P(ρ^#) ∩ `[0,1]^E` is the spanning-set polytope.
    SpanningDual,
    /// (ρ*)^#(X) = |X| − ρ(X), supermodular; P((ρ*)^#) ∩ `[0,1]^E` is the
    /// co-spanning polytope.
    CospanningDual,
}

/// Table-backed set function derived from a matroid's rank oracle.
pub fn matroid_set_function(m: &Matroid, kind: MatroidSetFunctionKind) -> SetFunction {
    let n = m.n();
    match kind {
        MatroidSetFunctionKind::Rank => {
            SetFunction::from_fn_int(n, |x| m.rank(x) as i64, Modularity::Submodular)
        }
        MatroidSetFunctionKind::SpanningDual => {
            matroid_set_function(m, MatroidSetFunctionKind::Rank).dual_supermodular()
        }
        MatroidSetFunctionKind::CospanningDual => SetFunction::from_fn_int(
            n,
            |x| x.len() as i64 - m.rank(x) as i64,
            Modularity::Supermodular,
        ),
    }
}

/// The polyhedron of `h` (by its modularity tag) intersected with the box
/// l ≤ x ≤ u. Fact 1 and Fact 2 describe the same sets through the
/// tightened functions [`SetFunction::tightened_upper`] and
/// [`SetFunction::tightened_lower`].
pub fn bound_function(
    h: &SetFunction,
    lower: Vec<Option<Rational>>,
    upper: Vec<Option<Rational>>,
) -> Result<PolyhedronDescription, Error> {
    let base = match h.modularity() {
        Modularity::Submodular => PolyhedronDescription::submodular(h.clone()),
        Modularity::Supermodular => PolyhedronDescription::supermodular(h.clone()),
        Modularity::Unknown => {
            return Err(Error::InvalidBounds(
                "bounding needs a submodular or supermodular tag".into(),
            ))
        }
    };
    base.intersect_box(lower, upper)
}

/// 0/1 box constraints of the right dimension.
pub fn unit_box(n: usize) -> (Vec<Option<Rational>>, Vec<Option<Rational>>) {
    (vec![Some(Rational::zero()); n], vec![Some(Rational::one()); n])
}

/// Matroid polytope Conv(I) = P(ρ) ∩ `[0,1]^E`.
pub fn matroid_polytope(m: &Matroid) -> PolyhedronDescription {
    let (lo, hi) = unit_box(m.n());
    PolyhedronDescription::submodular(matroid_set_function(m, MatroidSetFunctionKind::Rank))
        .intersect_box(lo, hi)
        .expect("dimensions agree")
}

/// Spanning-set polytope Conv(S) = P(ρ^#) ∩ `[0,1]^E`.
pub fn spanning_polytope(m: &Matroid) -> PolyhedronDescription {
    let (lo, hi) = unit_box(m.n());
    PolyhedronDescription::supermodular(matroid_set_function(
        m,
        MatroidSetFunctionKind::SpanningDual,
    ))
    .intersect_box(lo, hi)
    .expect("dimensions agree")
}

/// Co-spanning polytope Conv({X : E∖X ∈ I}) = P((ρ*)^#) ∩ `[0,1]^E`.
pub fn cospanning_polytope(m: &Matroid) -> PolyhedronDescription {
    let (lo, hi) = unit_box(m.n());
    PolyhedronDescription::supermodular(matroid_set_function(
        m,
        MatroidSetFunctionKind::CospanningDual,
    ))
    .intersect_box(lo, hi)
    .expect("dimensions agree")
}
