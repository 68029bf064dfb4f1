//! Builders for the concrete families: the alphabet Δ of square-class
//! vectors and SL(2,q) acting on it, the digraphs `X_q` and `X_q(n)`,
//! Hamming graphs, and Paley tournaments.

use std::collections::HashMap;
use std::fmt;

use crate::digraph::Digraph;
use crate::finfield::{FieldElement, FiniteField};
use crate::permaction::{
    tuple_index, wreath_generators, GeneratedAction, Labels, Permutation, MAX_PRODUCT_DOMAIN,
};
use crate::Error;

/// Rejects field orders outside `q ≡ 3 (mod 4)`, `q ≥ 7`.
pub fn check_xq_order(field: &FiniteField) -> Result<(), Error> {
    let q = field.order();
    if q % 4 != 3 {
        return Err(Error::BadOrder {
            q,
            reason: "q must be congruent to 3 mod 4",
        });
    }
    if q < 7 {
        return Err(Error::BadOrder {
            q,
            reason: "q = 3 is excluded, q must be at least 7",
        });
    }
    Ok(())
}

/// A 2×2 matrix over a finite field acting on row vectors from the right.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
    det: FieldElement,
}

impl Matrix2 {
    pub fn new(
        field: &FiniteField,
        a: FieldElement,
        b: FieldElement,
        c: FieldElement,
        d: FieldElement,
    ) -> Self {
        let det = field.sub(field.mul(a, d), field.mul(b, c));
        Matrix2 { a, b, c, d, det }
    }

    pub fn det(&self) -> FieldElement {
        self.det
    }

    pub fn identity(f: &FiniteField) -> Self {
        Self::new(f, f.one(), f.zero(), f.zero(), f.one())
    }

    /// The central involution `-I`.
    pub fn minus_identity(f: &FiniteField) -> Self {
        let m = f.neg(f.one());
        Self::new(f, m, f.zero(), f.zero(), m)
    }

    /// `(0 -1; 1 0)`.
    pub fn iota(f: &FiniteField) -> Self {
        Self::new(f, f.zero(), f.neg(f.one()), f.one(), f.zero())
    }

    /// `(0 1; 1 0)`, which has determinant -1.
    pub fn swap(f: &FiniteField) -> Self {
        Self::new(f, f.zero(), f.one(), f.one(), f.zero())
    }

    /// `(1 λ; 0 1)`.
    pub fn upper(f: &FiniteField, lambda: FieldElement) -> Self {
        Self::new(f, f.one(), lambda, f.zero(), f.one())
    }

    /// `(1 0; λ 1)`.
    pub fn lower(f: &FiniteField, lambda: FieldElement) -> Self {
        Self::new(f, f.one(), f.zero(), lambda, f.one())
    }

    pub fn diag(f: &FiniteField, x: FieldElement, y: FieldElement) -> Self {
        Self::new(f, x, f.zero(), f.zero(), y)
    }

    pub fn mul(&self, f: &FiniteField, o: &Matrix2) -> Matrix2 {
        Self::new(
            f,
            f.add(f.mul(self.a, o.a), f.mul(self.b, o.c)),
            f.add(f.mul(self.a, o.b), f.mul(self.b, o.d)),
            f.add(f.mul(self.c, o.a), f.mul(self.d, o.c)),
            f.add(f.mul(self.c, o.b), f.mul(self.d, o.d)),
        )
    }

    /// `(x, y) · M`.
    pub fn act(&self, f: &FiniteField, x: FieldElement, y: FieldElement) -> (FieldElement, FieldElement) {
        (
            f.add(f.mul(x, self.a), f.mul(y, self.c)),
            f.add(f.mul(x, self.b), f.mul(y, self.d)),
        )
    }
}

/// The orbit `[a,b]` of a nonzero vector under scalar multiplication by
/// nonzero squares, in canonical form: `b = ±1`, or `b = 0` and `a = ±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct OrbitClass {
    pub a: FieldElement,
    pub b: FieldElement,
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a.code(), self.b.code())
    }
}

/// Canonical representative of the square-class of `(a, b)`. Requires
/// `q ≡ 3 (mod 4)` so that `-1` is a nonsquare.
pub fn canonicalize(
    field: &FiniteField,
    a: FieldElement,
    b: FieldElement,
) -> Result<OrbitClass, Error> {
    if field.order() % 4 != 3 {
        return Err(Error::BadOrder {
            q: field.order(),
            reason: "q must be congruent to 3 mod 4",
        });
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(canonical(field, a, b))
}

fn canonical(f: &FiniteField, a: FieldElement, b: FieldElement) -> OrbitClass {
    let minus_one = f.neg(f.one());
    if b.is_zero() {
        let a = if f.is_square(a).expect("a is nonzero") {
            f.one()
        } else {
            minus_one
        };
        return OrbitClass { a, b };
    }
    let b_inv = f.inv(b).expect("b is nonzero");
    if f.is_square(b).expect("b is nonzero") {
        OrbitClass {
            a: f.mul(a, b_inv),
            b: f.one(),
        }
    } else {
        // -b⁻¹ is a square because -1 and b are both nonsquares.
        OrbitClass {
            a: f.neg(f.mul(a, b_inv)),
            b: minus_one,
        }
    }
}

/// The `2(q+1)` square-classes of nonzero vectors, in the order
/// `[a,1]` (ascending a), `[a,-1]` (ascending a), `[1,0]`, `[-1,0]`.
#[derive(Debug, Clone)]
pub struct DeltaDomain {
    field: FiniteField,
    classes: Vec<OrbitClass>,
    index: HashMap<OrbitClass, usize>,
}

impl DeltaDomain {
    pub fn new(field: &FiniteField) -> Result<Self, Error> {
        check_xq_order(field)?;
        let f = field;
        let minus_one = f.neg(f.one());
        let mut classes: Vec<OrbitClass> = f.elements().map(|a| OrbitClass { a, b: f.one() }).collect();
        classes.extend(f.elements().map(|a| OrbitClass { a, b: minus_one }));
        classes.push(OrbitClass { a: f.one(), b: f.zero() });
        classes.push(OrbitClass { a: minus_one, b: f.zero() });
        let index = classes.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        Ok(DeltaDomain {
            field: field.clone(),
            classes,
            index,
        })
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[OrbitClass] {
        &self.classes
    }

    pub fn class(&self, i: usize) -> OrbitClass {
        self.classes[i]
    }

    /// Index of the class containing the nonzero vector `(a, b)`.
    pub fn index_of(&self, a: FieldElement, b: FieldElement) -> Result<usize, Error> {
        let c = canonicalize(&self.field, a, b)?;
        Ok(self.index[&c])
    }

    /// Index of the class of `(a, b)` given as integers mod p.
    pub fn index_of_ints(&self, a: i64, b: i64) -> Result<usize, Error> {
        self.index_of(self.field.from_int(a), self.field.from_int(b))
    }

    /// Permutation of Δ induced by `v ↦ v·M`.
    pub fn matrix_permutation(&self, m: &Matrix2) -> Permutation {
        let f = &self.field;
        let images = self
            .classes
            .iter()
            .map(|c| {
                let (x, y) = m.act(f, c.a, c.b);
                self.index[&canonical(f, x, y)] as u32
            })
            .collect();
        Permutation::from_images(images).expect("invertible matrices permute Δ")
    }

    pub fn labels(&self) -> Labels {
        Labels::simple(self.classes.iter().map(ToString::to_string).collect())
    }
}

/// `SL(2,q)` on Δ generated by the transvections `(1 λ; 0 1)` and
/// `(1 0; λ 1)` for `λ` over the polynomial basis of `F_q`.
pub fn sl2_action(delta: &DeltaDomain) -> Result<GeneratedAction, Error> {
    let f = delta.field();
    let mut gens = Vec::new();
    for lambda in f.additive_basis() {
        gens.push(delta.matrix_permutation(&Matrix2::upper(f, lambda)));
        gens.push(delta.matrix_permutation(&Matrix2::lower(f, lambda)));
    }
    let action = GeneratedAction::new(delta.len(), gens)?.with_labels(delta.labels())?;
    let q = f.order() as usize;
    if q <= 11 {
        let order = q * (q * q - 1);
        let got = action.enumerate_group(order)?.len();
        if got != order {
            return Err(Error::GeneratorCheck {
                expected: order,
                got,
            });
        }
    }
    Ok(action)
}

/// Generators of the stabilizer of `[1,0]`: `diag(g², g⁻²)` for the
/// primitive element `g`, and the lower transvections over the basis.
pub fn borel_stabilizer_generators(delta: &DeltaDomain) -> Result<GeneratedAction, Error> {
    let f = delta.field();
    let g2 = f.mul(f.primitive_element(), f.primitive_element());
    let mut gens = vec![delta.matrix_permutation(&Matrix2::diag(f, g2, f.inv(g2)?))];
    for lambda in f.additive_basis() {
        gens.push(delta.matrix_permutation(&Matrix2::lower(f, lambda)));
    }
    Ok(GeneratedAction::new(delta.len(), gens)?.with_labels(delta.labels())?)
}

/// The digraph on the action's domain whose arcs are the orbit of the
/// ordered pair `seed = (tail, head)`.
pub fn orbital_graph(action: &GeneratedAction, seed: (usize, usize)) -> Result<Digraph, Error> {
    if seed.0 == seed.1 {
        return Err(Error::LoopSeed(seed.0));
    }
    let arcs = action.pair_orbit(seed)?;
    let g = Digraph::from_arcs(action.degree(), arcs)?;
    Ok(match action.labels() {
        Some(l) => g.with_labels(l.clone())?,
        None => g,
    })
}

/// Everything needed to reason about `X_q`: the alphabet, the `SL(2,q)`
/// action and the digraph itself.
#[derive(Debug, Clone)]
pub struct XqFamily {
    pub delta: DeltaDomain,
    pub action: GeneratedAction,
    pub graph: Digraph,
}

impl XqFamily {
    pub fn new(field: &FiniteField) -> Result<Self, Error> {
        let delta = DeltaDomain::new(field)?;
        let action = sl2_action(&delta)?;
        let graph = orbital_graph(&action, (delta.pos_infinity(), delta.zero_one()))?;
        Ok(XqFamily {
            delta,
            action,
            graph,
        })
    }

    pub fn field(&self) -> &FiniteField {
        self.delta.field()
    }

    /// Permutation of Δ induced by `-I`.
    pub fn z(&self) -> Permutation {
        self.delta
            .matrix_permutation(&Matrix2::minus_identity(self.field()))
    }

    /// Permutation of Δ induced by swapping coordinates.
    pub fn o(&self) -> Permutation {
        self.delta.matrix_permutation(&Matrix2::swap(self.field()))
    }

    pub fn iota(&self) -> Permutation {
        self.delta.matrix_permutation(&Matrix2::iota(self.field()))
    }
}

impl DeltaDomain {
    /// Index of `[1,0]`.
    pub fn pos_infinity(&self) -> usize {
        2 * self.field.order() as usize
    }

    /// Index of `[-1,0]`.
    pub fn neg_infinity(&self) -> usize {
        2 * self.field.order() as usize + 1
    }

    /// Index of `[0,1]`.
    pub fn zero_one(&self) -> usize {
        0
    }

    /// Index of `[a,1]`.
    pub fn plus_class(&self, a: FieldElement) -> usize {
        a.code() as usize
    }

    /// Index of `[a,-1]`.
    pub fn minus_class(&self, a: FieldElement) -> usize {
        self.field.order() as usize + a.code() as usize
    }
}

/// `X_q`, the `SL(2,q)`-orbital digraph of `([1,0],[0,1])`.
pub fn build_xq(field: &FiniteField) -> Result<Digraph, Error> {
    Ok(XqFamily::new(field)?.graph)
}

/// `X_q(n)` together with the wreath product `W = SL(2,q) wr Sym(n)`.
#[derive(Debug, Clone)]
pub struct XqnFamily {
    pub base: XqFamily,
    pub n: usize,
    pub wreath: GeneratedAction,
    pub graph: Digraph,
    /// `([1,0], …, [1,0])`.
    pub alpha: usize,
    /// `([0,1], [1,0], …, [1,0])`.
    pub beta: usize,
}

impl XqnFamily {
    pub fn new(field: &FiniteField, n: usize) -> Result<Self, Error> {
        let base = XqFamily::new(field)?;
        let d = base.delta.len();
        let wreath = wreath_generators(&base.action, n)?;
        let inf = base.delta.pos_infinity() as u32;
        let alpha = tuple_index(&vec![inf; n], d);
        let mut b = vec![inf; n];
        b[0] = base.delta.zero_one() as u32;
        let beta = tuple_index(&b, d);
        let graph = orbital_graph(&wreath, (beta, alpha))?;
        Ok(XqnFamily {
            base,
            n,
            wreath,
            graph,
            alpha,
            beta,
        })
    }
}

pub fn build_xqn(field: &FiniteField, n: usize) -> Result<(Digraph, GeneratedAction), Error> {
    let fam = XqnFamily::new(field, n)?;
    Ok((fam.graph, fam.wreath))
}

/// `Sym(m) wr Sym(n)` on `{0..m}ⁿ` with tuple labels.
pub fn hamming_action(m: usize, n: usize) -> Result<GeneratedAction, Error> {
    if m < 2 {
        return Err(Error::Parameter("alphabet size m must be at least 2".into()));
    }
    Ok(wreath_generators(&GeneratedAction::symmetric(m), n)?)
}

/// `H(m,n)`, or for `complement` the complement of `H(m,2)`.
pub fn build_hamming(m: usize, n: usize, complement: bool) -> Result<Digraph, Error> {
    if complement && n != 2 {
        return Err(Error::Parameter(
            "the Hamming complement is only defined here for n = 2".into(),
        ));
    }
    let action = hamming_action(m, n)?;
    let labels = action.labels().expect("wreath actions are labelled").clone();
    let want = if complement { 2 } else { 1 };
    let size = action.degree();
    let arcs: Vec<_> = (0..size)
        .flat_map(|u| (0..size).map(move |v| (u, v)))
        .filter(|&(u, v)| labels.hamming(u, v) == want)
        .collect();
    Ok(Digraph::from_arcs(size, arcs)?.with_labels(labels)?)
}

fn check_paley_order(field: &FiniteField) -> Result<(), Error> {
    if field.order() % 4 != 3 {
        return Err(Error::BadOrder {
            q: field.order(),
            reason: "Paley tournaments need q congruent to 3 mod 4",
        });
    }
    Ok(())
}

fn field_labels(field: &FiniteField) -> Labels {
    Labels::simple(field.elements().map(|x| x.to_string()).collect())
}

fn translation_generators(field: &FiniteField) -> Vec<Permutation> {
    field
        .additive_basis()
        .into_iter()
        .map(|c| {
            let images = field.elements().map(|a| field.add(a, c).code()).collect();
            Permutation::from_images(images).expect("translation is a bijection")
        })
        .collect()
}

/// The Paley tournament on `F_q` and the group `{a ↦ x²a + c}`, generated by
/// translations over the additive basis and multiplication by `g²`.
pub fn build_paley(field: &FiniteField) -> Result<(Digraph, GeneratedAction), Error> {
    check_paley_order(field)?;
    let f = field;
    let q = f.order() as usize;
    if q > MAX_PRODUCT_DOMAIN {
        return Err(Error::Parameter("field too large for a Paley tournament".into()));
    }
    let els: Vec<FieldElement> = f.elements().collect();
    let mut arcs = Vec::new();
    for &a in &els {
        for &b in &els {
            let d = f.sub(b, a);
            if !d.is_zero() && f.is_square(d)? {
                arcs.push((a.code() as usize, b.code() as usize));
            }
        }
    }
    let graph = Digraph::from_arcs(q, arcs)?.with_labels(field_labels(f))?;
    let g2 = f.mul(f.primitive_element(), f.primitive_element());
    let mut gens = translation_generators(f);
    let scale = f.elements().map(|a| f.mul(g2, a).code()).collect();
    gens.push(Permutation::from_images(scale)?);
    let action = GeneratedAction::new(q, gens)?.with_labels(field_labels(f))?;
    Ok((graph, action))
}

/// The translation group `{a ↦ a + c}` on `F_q`.
pub fn paley_translations(field: &FiniteField) -> Result<GeneratedAction, Error> {
    check_paley_order(field)?;
    Ok(GeneratedAction::new(field.order() as usize, translation_generators(field))?
        .with_labels(field_labels(field))?)
}
