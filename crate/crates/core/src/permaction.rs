//! Permutations acting on the right, generator-defined actions, and the
//! wreath product `H wr Sym(n)` in product action on `Δⁿ`.
//!
//! Every group computation here is a breadth-first closure over the
//! generators. Generators are visited in declaration order and frontier
//! points in discovery order, so all outputs are reproducible.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ActionError {
    #[error("domain size mismatch: {0} vs {1}")]
    DomainMismatch(usize, usize),
    #[error("image array is not a bijection of 0..{0}")]
    NotBijection(usize),
    #[error("point {point} is outside the domain of size {size}")]
    OutOfRange { point: usize, size: usize },
    #[error("tuple has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("number of coordinates must be at least 1")]
    ZeroCoordinates,
    #[error("group enumeration exceeded the cap of {0} elements")]
    CapExceeded(usize),
    #[error("product domain of size {base}^{n} is too large")]
    DomainTooLarge { base: usize, n: usize },
    #[error("action is not transitive")]
    NotTransitive,
}

/// A permutation of `0..N`, acting on the right: `x^(gh) = (x^g)^h`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n as u32).collect(),
        }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self, ActionError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(ActionError::NotBijection(n));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a, b);
        p
    }

    /// The cycle `(c₀ c₁ … c_{r-1})` on `n` points.
    pub fn cycle(n: usize, cycle: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for (i, &c) in cycle.iter().enumerate() {
            p.images[c] = cycle[(i + 1) % cycle.len()] as u32;
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self * other`: first `self`, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, ActionError> {
        if self.degree() != other.degree() {
            return Err(ActionError::DomainMismatch(self.degree(), other.degree()));
        }
        Ok(self.then(other))
    }

    pub(crate) fn then(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.apply(x);
                len += 1;
            }
            ord = lcm(ord, len);
        }
        ord
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    a / gcd(a, b) * b
}

/// Names for domain points: each point carries a tuple of symbols drawn from
/// a shared alphabet. Tuples of length 1 label plain points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labels {
    alphabet: Arc<Vec<String>>,
    tuples: Vec<Vec<u32>>,
}

impl Labels {
    pub fn new(alphabet: Vec<String>, tuples: Vec<Vec<u32>>) -> Self {
        Labels {
            alphabet: Arc::new(alphabet),
            tuples,
        }
    }

    /// Single-symbol labels `alphabet[i]` for point `i`.
    pub fn simple(alphabet: Vec<String>) -> Self {
        let tuples = (0..alphabet.len() as u32).map(|i| vec![i]).collect();
        Self::new(alphabet, tuples)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuple(&self, point: usize) -> &[u32] {
        &self.tuples[point]
    }

    pub fn tuples(&self) -> &[Vec<u32>] {
        &self.tuples
    }

    /// Rendered label, coordinates joined with `|`.
    pub fn render(&self, point: usize) -> String {
        self.tuples[point]
            .iter()
            .map(|&s| self.alphabet[s as usize].as_str())
            .collect::<Vec<_>>()
            .join("|")
    }

    /// Number of coordinates in which the labels of `u` and `v` differ.
    pub fn hamming(&self, u: usize, v: usize) -> usize {
        self.tuples[u]
            .iter()
            .zip(&self.tuples[v])
            .filter(|(a, b)| a != b)
            .count()
    }

    /// Parses rendered labels, interning symbols in order of first use.
    pub fn parse<S: AsRef<str>>(rendered: &[S]) -> Self {
        let mut alphabet = Vec::new();
        let mut index: HashMap<String, u32> = HashMap::new();
        let tuples = rendered
            .iter()
            .map(|r| {
                r.as_ref()
                    .split('|')
                    .map(|sym| {
                        *index.entry(sym.to_string()).or_insert_with(|| {
                            alphabet.push(sym.to_string());
                            alphabet.len() as u32 - 1
                        })
                    })
                    .collect()
            })
            .collect();
        Self::new(alphabet, tuples)
    }
}

/// A permutation group given by generators acting on `0..N`.
#[derive(Debug, Clone)]
pub struct GeneratedAction {
    degree: usize,
    generators: Vec<Permutation>,
    labels: Option<Labels>,
}

impl GeneratedAction {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, ActionError> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(ActionError::DomainMismatch(degree, g.degree()));
        }
        Ok(GeneratedAction {
            degree,
            generators,
            labels: None,
        })
    }

    pub fn with_labels(mut self, labels: Labels) -> Result<Self, ActionError> {
        if labels.len() != self.degree {
            return Err(ActionError::DomainMismatch(self.degree, labels.len()));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// The trivial group on `n` points.
    pub fn trivial(n: usize) -> Self {
        GeneratedAction {
            degree: n,
            generators: Vec::new(),
            labels: None,
        }
    }

    /// `Sym(n)` in its natural action, generated by `(0 1)` and `(0 1 … n-1)`.
    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Permutation::transposition(n, 0, 1));
        }
        if n >= 3 {
            gens.push(Permutation::cycle(n, &(0..n).collect::<Vec<_>>()));
        }
        GeneratedAction {
            degree: n,
            generators: gens,
            labels: None,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn labels(&self) -> Option<&Labels> {
        self.labels.as_ref()
    }

    fn check_point(&self, point: usize) -> Result<(), ActionError> {
        if point >= self.degree {
            Err(ActionError::OutOfRange {
                point,
                size: self.degree,
            })
        } else {
            Ok(())
        }
    }

    /// Orbit of `point`, sorted ascending.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>, ActionError> {
        self.check_point(point)?;
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut queue = VecDeque::from([point]);
        let mut out = vec![point];
        while let Some(x) = queue.pop_front() {
            for g in &self.generators {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// All orbits, ordered by least member.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !assigned[x] {
                let orb = self.orbit(x).expect("point in range");
                for &y in &orb {
                    assigned[y] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).map(|o| o.len()) == Ok(self.degree)
    }

    /// Orbit of an ordered pair under the diagonal action, sorted.
    pub fn pair_orbit(&self, seed: (usize, usize)) -> Result<Vec<(usize, usize)>, ActionError> {
        self.check_point(seed.0)?;
        self.check_point(seed.1)?;
        let n = self.degree;
        let key = |(a, b): (usize, usize)| a * n + b;
        let mut seen = HashSet::from([key(seed)]);
        let mut queue = VecDeque::from([seed]);
        let mut out = vec![seed];
        while let Some((a, b)) = queue.pop_front() {
            for g in &self.generators {
                let img = (g.apply(a), g.apply(b));
                if seen.insert(key(img)) {
                    out.push(img);
                    queue.push_back(img);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// Whether the group acts transitively on the given set of points: the
    /// orbit of one member must coincide with the set.
    pub fn is_transitive_on_points(&self, set: &[usize]) -> Result<Transitivity, ActionError> {
        let Some(&first) = set.first() else {
            return Ok(Transitivity::VACUOUS);
        };
        for &x in set {
            self.check_point(x)?;
        }
        let mut want: Vec<usize> = set.to_vec();
        want.sort_unstable();
        want.dedup();
        let orbit = self.orbit(first)?;
        Ok(Transitivity::from_bool(orbit == want))
    }

    /// Pair version of [`Self::is_transitive_on_points`].
    pub fn is_transitive_on_pairs(
        &self,
        set: &[(usize, usize)],
    ) -> Result<Transitivity, ActionError> {
        let Some(&first) = set.first() else {
            return Ok(Transitivity::VACUOUS);
        };
        for &(a, b) in set {
            self.check_point(a)?;
            self.check_point(b)?;
        }
        let mut want = set.to_vec();
        want.sort_unstable();
        want.dedup();
        let orbit = self.pair_orbit(first)?;
        Ok(Transitivity::from_bool(orbit == want))
    }

    /// Number of orbits of the diagonal action on the given pair set, or
    /// `None` if the set is not invariant.
    pub fn pair_orbit_count(&self, set: &[(usize, usize)]) -> Result<Option<usize>, ActionError> {
        let mut remaining: HashSet<(usize, usize)> = set.iter().copied().collect();
        let mut count = 0;
        let mut sorted = set.to_vec();
        sorted.sort_unstable();
        for p in sorted {
            if !remaining.contains(&p) {
                continue;
            }
            for q in self.pair_orbit(p)? {
                if !remaining.remove(&q) {
                    return Ok(None);
                }
            }
            count += 1;
        }
        Ok(Some(count))
    }

    /// Every element of the generated group, in breadth-first order
    /// starting from the identity. Fails once more than `cap` are found.
    pub fn enumerate_group(&self, cap: usize) -> Result<Vec<Permutation>, ActionError> {
        let id = Permutation::identity(self.degree);
        let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
        let mut elements = vec![id];
        let mut next = 0;
        while next < elements.len() {
            let x = elements[next].clone();
            next += 1;
            for g in &self.generators {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if elements.len() >= cap {
                        return Err(ActionError::CapExceeded(cap));
                    }
                    seen.insert(y.clone());
                    elements.push(y);
                }
            }
        }
        Ok(elements)
    }
}

/// Outcome of a transitivity test. `vacuous` is set when the tested set was
/// empty, in which case the test passes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Transitivity {
    pub transitive: bool,
    pub vacuous: bool,
}

impl Transitivity {
    const VACUOUS: Transitivity = Transitivity {
        transitive: true,
        vacuous: true,
    };

    fn from_bool(transitive: bool) -> Self {
        Transitivity {
            transitive,
            vacuous: false,
        }
    }
}

/// Sizes of `η^{H_ν}` and `ν^{H_η}` computed from an enumerated group.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrbitLengthDuality {
    pub eta_under_stab_nu: usize,
    pub nu_under_stab_eta: usize,
}

impl OrbitLengthDuality {
    pub fn holds(&self) -> bool {
        self.eta_under_stab_nu == self.nu_under_stab_eta
    }
}

/// Orbit of `point` under the subgroup of `elements` fixing `fixed`.
fn stabilizer_orbit_len(elements: &[Permutation], fixed: usize, point: usize) -> usize {
    let mut images: Vec<usize> = elements
        .iter()
        .filter(|g| g.apply(fixed) == fixed)
        .map(|g| g.apply(point))
        .collect();
    images.sort_unstable();
    images.dedup();
    images.len()
}

/// Compares `|η^{H_ν}|` with `|ν^{H_η}|` for a transitive action.
pub fn orbit_length_duality(
    action: &GeneratedAction,
    eta: usize,
    nu: usize,
    cap: usize,
) -> Result<OrbitLengthDuality, ActionError> {
    action.check_point(eta)?;
    action.check_point(nu)?;
    if !action.is_transitive() {
        return Err(ActionError::NotTransitive);
    }
    let elements = action.enumerate_group(cap)?;
    Ok(orbit_length_duality_from(&elements, eta, nu))
}

/// As [`orbit_length_duality`], reusing an already enumerated group.
pub fn orbit_length_duality_from(
    elements: &[Permutation],
    eta: usize,
    nu: usize,
) -> OrbitLengthDuality {
    OrbitLengthDuality {
        eta_under_stab_nu: stabilizer_orbit_len(elements, nu, eta),
        nu_under_stab_eta: stabilizer_orbit_len(elements, eta, nu),
    }
}

/// `σ(h₁,…,h_n)` in `H wr Sym(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathElement {
    top: Permutation,
    base: Vec<Permutation>,
}

impl WreathElement {
    pub fn new(top: Permutation, base: Vec<Permutation>) -> Result<Self, ActionError> {
        if top.degree() != base.len() {
            return Err(ActionError::LengthMismatch {
                expected: top.degree(),
                got: base.len(),
            });
        }
        if base.is_empty() {
            return Err(ActionError::ZeroCoordinates);
        }
        let d = base[0].degree();
        if let Some(h) = base.iter().find(|h| h.degree() != d) {
            return Err(ActionError::DomainMismatch(d, h.degree()));
        }
        Ok(WreathElement { top, base })
    }

    pub fn coordinates(&self) -> usize {
        self.base.len()
    }

    /// Coordinate `i` of the image is `t[i^{σ⁻¹}]^{h_i}`.
    pub fn apply(&self, t: &[u32]) -> Result<Vec<u32>, ActionError> {
        let n = self.base.len();
        if t.len() != n {
            return Err(ActionError::LengthMismatch {
                expected: n,
                got: t.len(),
            });
        }
        let d = self.base[0].degree();
        if let Some(&x) = t.iter().find(|&&x| x as usize >= d) {
            return Err(ActionError::OutOfRange {
                point: x as usize,
                size: d,
            });
        }
        let top_inv = self.top.inverse();
        Ok((0..n)
            .map(|i| self.base[i].apply(t[top_inv.apply(i)] as usize) as u32)
            .collect())
    }

    /// The product `self · other` (apply `self` first).
    pub fn compose(&self, other: &WreathElement) -> Result<WreathElement, ActionError> {
        if self.coordinates() != other.coordinates() {
            return Err(ActionError::DomainMismatch(
                self.coordinates(),
                other.coordinates(),
            ));
        }
        let other_top_inv = other.top.inverse();
        let base = (0..self.coordinates())
            .map(|i| self.base[other_top_inv.apply(i)].compose(&other.base[i]))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(WreathElement {
            top: self.top.then(&other.top),
            base,
        })
    }
}

/// Mixed-radix index of a tuple, coordinate 0 most significant.
pub fn tuple_index(t: &[u32], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + x as usize)
}

pub fn index_tuple(mut index: usize, base: usize, n: usize) -> Vec<u32> {
    let mut t = vec![0u32; n];
    for slot in t.iter_mut().rev() {
        *slot = (index % base) as u32;
        index /= base;
    }
    t
}

/// Upper bound on `|Δ|ⁿ` for product domains.
pub const MAX_PRODUCT_DOMAIN: usize = 1 << 20;

/// Generators of `H wr Sym(n)` acting on `Δⁿ`: each generator of `H` in the
/// first coordinate, plus the adjacent transpositions of coordinates.
/// Points are tuples in mixed-radix order and carry tuple labels built from
/// the base action's alphabet (or the point numbers when it has none).
pub fn wreath_generators(
    base: &GeneratedAction,
    n: usize,
) -> Result<GeneratedAction, ActionError> {
    if n < 1 {
        return Err(ActionError::ZeroCoordinates);
    }
    let d = base.degree();
    let size = d
        .checked_pow(n as u32)
        .filter(|&s| s <= MAX_PRODUCT_DOMAIN)
        .ok_or(ActionError::DomainTooLarge { base: d, n })?;
    let tuples: Vec<Vec<u32>> = (0..size).map(|i| index_tuple(i, d, n)).collect();
    let id = Permutation::identity(d);
    let id_top = Permutation::identity(n);

    let mut elements = Vec::new();
    for h in base.generators() {
        let mut b = vec![id.clone(); n];
        b[0] = h.clone();
        elements.push(WreathElement::new(id_top.clone(), b)?);
    }
    for i in 0..n.saturating_sub(1) {
        elements.push(WreathElement::new(
            Permutation::transposition(n, i, i + 1),
            vec![id.clone(); n],
        )?);
    }

    let generators = elements
        .iter()
        .map(|w| {
            let images = tuples
                .iter()
                .map(|t| w.apply(t).map(|img| tuple_index(&img, d) as u32))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Permutation { images })
        })
        .collect::<Result<Vec<_>, ActionError>>()?;

    let alphabet = match base.labels() {
        Some(l) if l.tuples().iter().all(|t| t.len() == 1) => (0..d)
            .map(|i| l.render(i))
            .collect(),
        _ => (0..d).map(|i| i.to_string()).collect(),
    };
    GeneratedAction::new(size, generators)?.with_labels(Labels::new(alphabet, tuples))
}

/// Permutation of `Δⁿ` induced by applying `h` in every coordinate.
pub fn diagonal_permutation(h: &Permutation, n: usize) -> Permutation {
    let d = h.degree();
    let size = d.pow(n as u32);
    let images = (0..size)
        .map(|i| {
            let t: Vec<u32> = index_tuple(i, d, n)
                .into_iter()
                .map(|x| h.apply(x as usize) as u32)
                .collect();
            tuple_index(&t, d) as u32
        })
        .collect();
    Permutation { images }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_right_action() {
        let a = Permutation::transposition(3, 0, 1);
        let b = Permutation::transposition(3, 1, 2);
        let ab = a.compose(&b).unwrap();
        // 0 -> 1 -> 2, 1 -> 0 -> 0, 2 -> 2 -> 1
        assert_eq!(ab.images(), &[2, 0, 1]);
        assert!(a.compose(&a).unwrap().is_identity());
        assert_eq!(Permutation::identity(3).compose(&b).unwrap(), b);
        assert!(a.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_images(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn trivial_orbits_and_pairs() {
        let a = GeneratedAction::trivial(4);
        assert_eq!(a.orbit(2).unwrap(), vec![2]);
        assert_eq!(a.pair_orbit((1, 3)).unwrap(), vec![(1, 3)]);
        assert_eq!(a.enumerate_group(10).unwrap().len(), 1);
        assert!(a.orbit(4).is_err());
    }

    #[test]
    fn sym3_is_two_transitive() {
        let s = GeneratedAction::symmetric(3);
        let pairs = s.pair_orbit((0, 1)).unwrap();
        assert_eq!(pairs.len(), 6);
        assert!(pairs.iter().all(|(a, b)| a != b));
        assert_eq!(s.enumerate_group(100).unwrap().len(), 6);
    }

    #[test]
    fn transitivity_on_sets() {
        let fixed = GeneratedAction::new(3, vec![Permutation::transposition(3, 0, 1)]).unwrap();
        assert!(!fixed.is_transitive_on_points(&[0, 1, 2]).unwrap().transitive);
        assert!(fixed.is_transitive_on_points(&[0, 1]).unwrap().transitive);
        // An orbit that leaves the set is not transitivity on the set.
        assert!(!fixed.is_transitive_on_points(&[0]).unwrap().transitive);
        let empty = fixed.is_transitive_on_points(&[]).unwrap();
        assert!(empty.transitive && empty.vacuous);
        let s = GeneratedAction::symmetric(3);
        assert!(s.is_transitive_on_points(&[0, 1, 2]).unwrap().transitive);
    }

    #[test]
    fn enumeration_cap() {
        let s = GeneratedAction::symmetric(5);
        assert_eq!(s.enumerate_group(120).unwrap().len(), 120);
        assert_eq!(s.enumerate_group(119), Err(ActionError::CapExceeded(119)));
    }

    #[test]
    fn duality_small_cases() {
        let s = GeneratedAction::symmetric(3);
        let d = orbit_length_duality(&s, 0, 1, 100).unwrap();
        assert_eq!(d.eta_under_stab_nu, 2);
        assert_eq!(d.nu_under_stab_eta, 2);
        assert!(orbit_length_duality(&s, 2, 2, 100).unwrap().holds());
    }

    #[test]
    fn wreath_apply_examples() {
        let swap = WreathElement::new(
            Permutation::transposition(2, 0, 1),
            vec![Permutation::identity(4); 2],
        )
        .unwrap();
        assert_eq!(swap.apply(&[0, 1]).unwrap(), vec![1, 0]);

        let h = Permutation::cycle(4, &[0, 1, 2, 3]);
        let first = WreathElement::new(
            Permutation::identity(2),
            vec![h.clone(), Permutation::identity(4)],
        )
        .unwrap();
        assert_eq!(first.apply(&[2, 2]).unwrap(), vec![3, 2]);
        assert!(first.apply(&[1]).is_err());
    }

    #[test]
    fn wreath_generators_sym3_squared() {
        let w = wreath_generators(&GeneratedAction::symmetric(3), 2).unwrap();
        assert_eq!(w.degree(), 9);
        assert_eq!(w.enumerate_group(1000).unwrap().len(), 72);
        assert_eq!(w.labels().unwrap().render(5), "1|2");
    }

    #[test]
    fn wreath_generators_single_coordinate() {
        let s = GeneratedAction::symmetric(4);
        let w = wreath_generators(&s, 1).unwrap();
        assert_eq!(w.generators(), s.generators());
        assert_eq!(wreath_generators(&s, 0).unwrap_err(), ActionError::ZeroCoordinates);
    }

    #[test]
    fn label_parsing_interns_in_order() {
        let l = Labels::parse(&["[1,0]|[1,0]", "[1,0]|[0,1]", "[0,1]|[1,0]"]);
        assert_eq!(l.alphabet(), &["[1,0]".to_string(), "[0,1]".to_string()]);
        assert_eq!(l.hamming(0, 1), 1);
        assert_eq!(l.hamming(1, 2), 2);
        assert_eq!(l.render(2), "[0,1]|[1,0]");
    }
}
