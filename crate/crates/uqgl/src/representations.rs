//! Exact matrix representations: the defining representation, m-fold
//! (reversed) coproducts, evaluation of formal expressions, the symmetric
//! subspace basis M(mu), its normalization, and the closed-form symmetric
//! representation.
//!
//! Everything is sparse and exact over [`QScalar`]. The symmetric subspace
//! of V^{tensor m} is represented by its spanning vectors M(mu), never by an
//! explicit projection operator: restriction reads coefficients off the
//! sorted-word coordinates (each M(mu) has coefficient 1 there and the
//! supports for different mu are disjoint) and checks the residual exactly.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::combinatorics::{coset_reps, enumerate_compositions, Composition};
use crate::expressions::{dressed_root, AlgebraExpr, Sign, Word, WordFactor};
use crate::scalars::{q_integer, QScalar};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RepError {
    #[error("generator index {index} out of range for N = {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("operator does not preserve the symmetric subspace (column {col}, tensor row {row})")]
    NotInvariant { col: usize, row: usize },
    #[error("normalization recursion is path dependent at {0:?}")]
    PathDependent(Composition),
}

/// A generator of the algebra: a Cartan power q^{half * eps_level / 2} or a
/// Chevalley element ê_{±,index}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Generator {
    Eps { level: usize, half: i64 },
    Chevalley { sign: Sign, index: usize },
}

/// The space a matrix acts on.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RepSpace {
    /// V^{tensor k} with V = C^{N+1}; basis: words (j_1, ..., j_k) in
    /// row-major order (j_1 most significant).
    Tensor { levels: usize, factors: usize },
    /// The symmetric subspace of V^{tensor m}; basis: occupation vectors in
    /// lexicographic order.
    Sym { levels: usize, particles: usize },
}

impl RepSpace {
    pub fn dim(&self) -> usize {
        match *self {
            RepSpace::Tensor { levels, factors } => (levels + 1).pow(factors as u32),
            RepSpace::Sym { levels, particles } => binomial(particles + levels, levels),
        }
    }

    pub fn levels(&self) -> usize {
        match *self {
            RepSpace::Tensor { levels, .. } | RepSpace::Sym { levels, .. } => levels,
        }
    }
}

fn binomial(n: usize, k: usize) -> usize {
    let k = k.min(n - k);
    let mut num = 1usize;
    let mut den = 1usize;
    for t in 0..k {
        num *= n - t;
        den *= t + 1;
    }
    num / den
}

/// Index of a tensor word in row-major order.
pub fn tensor_index(word: &[usize], levels: usize) -> usize {
    word.iter().fold(0, |acc, &j| acc * (levels + 1) + j)
}

/// The word at a row-major tensor index.
pub fn tensor_word(mut index: usize, levels: usize, factors: usize) -> Vec<usize> {
    let mut word = vec![0; factors];
    for slot in (0..factors).rev() {
        word[slot] = index % (levels + 1);
        index /= levels + 1;
    }
    word
}

/// A sparse square matrix over QScalar with basis metadata.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    pub space: RepSpace,
    entries: BTreeMap<(usize, usize), QScalar>,
}

pub type SparseVec = BTreeMap<usize, QScalar>;

fn vec_insert_add(v: &mut SparseVec, key: usize, add: QScalar) {
    if add.is_zero() {
        return;
    }
    match v.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(add);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let sum = e.get().add(&add);
            if sum.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = sum;
            }
        }
    }
}

impl RepMatrix {
    pub fn zero(space: RepSpace) -> Self {
        RepMatrix {
            space,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(space: RepSpace) -> Self {
        let mut m = RepMatrix::zero(space);
        for d in 0..m.space.dim() {
            m.entries.insert((d, d), QScalar::one());
        }
        m
    }

    pub fn scalar(space: RepSpace, c: &QScalar) -> Self {
        RepMatrix::identity(space).scale(c)
    }

    pub fn insert_add(&mut self, row: usize, col: usize, v: QScalar) {
        if v.is_zero() {
            return;
        }
        debug_assert!(row < self.space.dim() && col < self.space.dim());
        match self.entries.entry((row, col)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().add(&v);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn entry(&self, row: usize, col: usize) -> QScalar {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(QScalar::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &QScalar)> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add(&self, other: &RepMatrix) -> RepMatrix {
        assert_eq!(self.space, other.space);
        let mut out = self.clone();
        for (&(r, c), v) in &other.entries {
            out.insert_add(r, c, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &RepMatrix) -> RepMatrix {
        self.add(&other.scale(&QScalar::from_int(-1)))
    }

    pub fn scale(&self, c: &QScalar) -> RepMatrix {
        let mut out = RepMatrix::zero(self.space.clone());
        if c.is_zero() {
            return out;
        }
        for (&(r, s), v) in &self.entries {
            out.entries.insert((r, s), v.mul(c));
        }
        out
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        assert_eq!(self.space, other.space);
        let mut rows_of_other: HashMap<usize, Vec<(usize, &QScalar)>> = HashMap::new();
        for (&(r, c), v) in &other.entries {
            rows_of_other.entry(r).or_default().push((c, v));
        }
        let mut out = RepMatrix::zero(self.space.clone());
        for (&(r, c), v) in &self.entries {
            if let Some(row) = rows_of_other.get(&c) {
                for &(c2, v2) in row {
                    out.insert_add(r, c2, v.mul(v2));
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &RepMatrix) -> RepMatrix {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn apply(&self, x: &SparseVec) -> SparseVec {
        let mut y = SparseVec::new();
        for (&(r, c), v) in &self.entries {
            if let Some(xc) = x.get(&c) {
                vec_insert_add(&mut y, r, v.mul(xc));
            }
        }
        y
    }

    /// If the matrix is c * Id, return c; otherwise the first offending
    /// entry as a witness.
    pub fn as_scalar(&self) -> Result<QScalar, (usize, usize)> {
        let dim = self.space.dim();
        let c = self.entry(0, 0);
        for d in 0..dim {
            if self.entry(d, d) != c {
                return Err((d, d));
            }
        }
        for (&(r, s), _) in &self.entries {
            if r != s {
                return Err((r, s));
            }
        }
        Ok(c)
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RepMatrix {:?} dim {}", self.space, self.space.dim())?;
        for (&(r, c), v) in &self.entries {
            writeln!(f, "  [{r},{c}] = {v}")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Defining representation and coproducts
// ---------------------------------------------------------------------------

fn check_index(g: &Generator, n: usize) -> Result<(), RepError> {
    match *g {
        Generator::Eps { level, .. } if level > n => Err(RepError::IndexOutOfRange {
            index: level,
            bound: n,
        }),
        Generator::Chevalley { index, .. } if index < 1 || index > n => {
            Err(RepError::IndexOutOfRange { index, bound: n })
        }
        _ => Ok(()),
    }
}

/// The defining action on V = C^{N+1}: ê_{+,i} I_j = δ_{ij} I_{j-1},
/// ê_{-,i} I_{i-1} = I_i, q^{±eps_i/2} I_j = q^{±δ_{ij}/2} I_j.
pub fn defining_action(g: &Generator, n: usize) -> Result<RepMatrix, RepError> {
    coproduct_matrix(g, 1, n, false)
}

/// s-exponent of q^{h_index/2} on the letter j: h_index = eps_{index-1} - eps_index.
fn h_weight(index: usize, j: usize) -> i64 {
    i64::from(j + 1 == index) - i64::from(j == index)
}

/// The m-fold coproduct of a generator on V^{tensor m}; `reversed` selects
/// the factor-reversed variant.
pub fn coproduct_matrix(
    g: &Generator,
    m: usize,
    n: usize,
    reversed: bool,
) -> Result<RepMatrix, RepError> {
    check_index(g, n)?;
    let space = RepSpace::Tensor {
        levels: n,
        factors: m,
    };
    let dim = space.dim();
    let mut out = RepMatrix::zero(space);
    match *g {
        Generator::Eps { level, half } => {
            for col in 0..dim {
                let word = tensor_word(col, n, m);
                let count = word.iter().filter(|&&j| j == level).count() as i64;
                out.insert_add(col, col, QScalar::s_power(half * count));
            }
        }
        Generator::Chevalley { sign, index } => {
            let left_sign: i64 = if reversed { -1 } else { 1 };
            for col in 0..dim {
                let word = tensor_word(col, n, m);
                for slot in 0..m {
                    let j = word[slot];
                    let target = match sign {
                        Sign::Plus if j == index => j - 1,
                        Sign::Minus if j + 1 == index => j + 1,
                        _ => continue,
                    };
                    let mut s_exp = 0i64;
                    for (l, &wl) in word.iter().enumerate() {
                        if l < slot {
                            s_exp += left_sign * h_weight(index, wl);
                        } else if l > slot {
                            s_exp -= left_sign * h_weight(index, wl);
                        }
                    }
                    let mut new_word = word.clone();
                    new_word[slot] = target;
                    out.insert_add(tensor_index(&new_word, n), col, QScalar::s_power(s_exp));
                }
            }
        }
    }
    Ok(out)
}

/// The unpadded slot operator id ⊗ ... ⊗ ê_{±,index} ⊗ ... ⊗ id acting at
/// `slot` (1-based) of V^{tensor m}.
pub fn slot_operator(
    sign: Sign,
    index: usize,
    slot: usize,
    m: usize,
    n: usize,
) -> Result<RepMatrix, RepError> {
    check_index(&Generator::Chevalley { sign, index }, n)?;
    assert!(slot >= 1 && slot <= m);
    let space = RepSpace::Tensor {
        levels: n,
        factors: m,
    };
    let dim = space.dim();
    let mut out = RepMatrix::zero(space);
    for col in 0..dim {
        let word = tensor_word(col, n, m);
        let j = word[slot - 1];
        let target = match sign {
            Sign::Plus if j == index => j - 1,
            Sign::Minus if j + 1 == index => j + 1,
            _ => continue,
        };
        let mut new_word = word.clone();
        new_word[slot - 1] = target;
        out.insert_add(tensor_index(&new_word, n), col, QScalar::one());
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// The symmetric-subspace basis
// ---------------------------------------------------------------------------

/// The spanning vectors M(mu) of the symmetric subspace, as exact
/// coordinates in V^{tensor m}, plus index bookkeeping.
#[derive(Clone, Debug)]
pub struct SymBasis {
    pub levels: usize,
    pub particles: usize,
    pub comps: Vec<Composition>,
    index_of: HashMap<Vec<usize>, usize>,
    /// sparse tensor coordinates of each M(mu), sorted by tensor index
    vectors: Vec<Vec<(usize, QScalar)>>,
    /// tensor index of the sorted word of each mu
    sorted_word_idx: Vec<usize>,
}

/// Build the M(mu) basis: M(mu) = sum over minimal representatives sigma of
/// q^{-inv(sigma)} sigma(v(mu)), with v(mu) the sorted word.
pub fn sym_basis(m: usize, n: usize) -> SymBasis {
    let comps = enumerate_compositions(m, n);
    let mut index_of = HashMap::new();
    let mut vectors = Vec::with_capacity(comps.len());
    let mut sorted_word_idx = Vec::with_capacity(comps.len());
    for (pos, mu) in comps.iter().enumerate() {
        index_of.insert(mu.0.clone(), pos);
        let word = mu.sorted_index();
        sorted_word_idx.push(tensor_index(&word.0, n));
        let mut coords: Vec<(usize, QScalar)> = coset_reps(&word)
            .reps
            .iter()
            .map(|sigma| {
                let idx = tensor_index(&sigma.act(&word.0), n);
                (idx, QScalar::s_power(-2 * (sigma.inversions() as i64)))
            })
            .collect();
        coords.sort_by_key(|&(idx, _)| idx);
        vectors.push(coords);
    }
    SymBasis {
        levels: n,
        particles: m,
        comps,
        index_of,
        vectors,
        sorted_word_idx,
    }
}

impl SymBasis {
    pub fn space(&self) -> RepSpace {
        RepSpace::Sym {
            levels: self.levels,
            particles: self.particles,
        }
    }

    pub fn tensor_space(&self) -> RepSpace {
        RepSpace::Tensor {
            levels: self.levels,
            factors: self.particles,
        }
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn position(&self, mu: &Composition) -> Option<usize> {
        self.index_of.get(&mu.0).copied()
    }

    /// Coordinates of M(mu) in the tensor basis.
    pub fn vector(&self, pos: usize) -> SparseVec {
        self.vectors[pos]
            .iter()
            .map(|(i, c)| (*i, c.clone()))
            .collect()
    }

    pub fn sorted_word_index(&self, pos: usize) -> usize {
        self.sorted_word_idx[pos]
    }

    /// Express a tensor vector in the M(mu) basis, failing exactly when it
    /// is outside the span. The coefficient of M(mu) is read off at the
    /// sorted word of mu, then the residual is checked entry by entry.
    pub fn coordinates(&self, y: &SparseVec) -> Result<Vec<(usize, QScalar)>, usize> {
        let mut coeffs = Vec::new();
        let mut residual = y.clone();
        for pos in 0..self.len() {
            if let Some(c) = y.get(&self.sorted_word_idx[pos]) {
                if c.is_zero() {
                    continue;
                }
                for (idx, base) in &self.vectors[pos] {
                    vec_insert_add(&mut residual, *idx, c.mul(base).neg());
                }
                coeffs.push((pos, c.clone()));
            }
        }
        match residual.keys().next() {
            None => Ok(coeffs),
            Some(&row) => Err(row),
        }
    }
}

/// Restrict a tensor-space operator to the symmetric subspace, expressed in
/// the M(mu) basis. Fails with `NotInvariant` when some image leaves the
/// span.
pub fn restrict_to_sym(a: &RepMatrix, basis: &SymBasis) -> Result<RepMatrix, RepError> {
    assert_eq!(a.space, basis.tensor_space());
    let mut out = RepMatrix::zero(basis.space());
    for col in 0..basis.len() {
        let y = a.apply(&basis.vector(col));
        let coeffs = basis
            .coordinates(&y)
            .map_err(|row| RepError::NotInvariant { col, row })?;
        for (row, c) in coeffs {
            out.insert_add(row, col, c);
        }
    }
    Ok(out)
}

/// The normalization scalars c(mu), anchored at c(m, 0, ..., 0) = 1 and
/// propagated along single-particle moves; every composition is reached
/// along several move orders and the recursion is checked for consistency
/// on each revisit.
pub fn normalization_scalars(m: usize, n: usize) -> Result<Vec<QScalar>, RepError> {
    let basis = sym_basis(m, n);
    let mut values: Vec<Option<QScalar>> = vec![None; basis.len()];
    let anchor = {
        let mut v = vec![0usize; n + 1];
        v[0] = m;
        Composition(v)
    };
    let start = basis.position(&anchor).expect("anchor composition exists");
    values[start] = Some(QScalar::one());
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(pos) = queue.pop_front() {
        let mu = basis.comps[pos].clone();
        let c_mu = values[pos].clone().unwrap();
        for i in 1..=n {
            if mu.0[i - 1] == 0 {
                continue;
            }
            let mut target = mu.0.clone();
            target[i - 1] -= 1;
            target[i] += 1;
            let tpos = basis.position(&Composition(target)).unwrap();
            // c(mu - i) / c(mu) = q^{(mu_{i-1} - mu_i - 1)/2}
            let ratio = QScalar::s_power(mu.0[i - 1] as i64 - mu.0[i] as i64 - 1);
            let val = c_mu.mul(&ratio);
            match &values[tpos] {
                None => {
                    values[tpos] = Some(val);
                    queue.push_back(tpos);
                }
                Some(existing) => {
                    if *existing != val {
                        return Err(RepError::PathDependent(basis.comps[tpos].clone()));
                    }
                }
            }
        }
    }
    Ok(values.into_iter().map(|v| v.unwrap()).collect())
}

/// The closed-form action of a generator on the normalized symmetric basis:
/// ê_{+,i} carries M(mu) to [mu_{i-1} + 1] times the shifted basis vector
/// (zero when level i is empty), ê_{-,i} to [mu_i + 1] times the opposite
/// shift (zero when level i-1 is empty), and q^{half eps_i/2} is diagonal.
pub fn exrep_generator(g: &Generator, m: usize, n: usize) -> Result<RepMatrix, RepError> {
    check_index(g, n)?;
    let basis = sym_basis(m, n);
    let mut out = RepMatrix::zero(basis.space());
    for (col, mu) in basis.comps.iter().enumerate() {
        match *g {
            Generator::Eps { level, half } => {
                out.insert_add(col, col, QScalar::s_power(half * mu.0[level] as i64));
            }
            Generator::Chevalley {
                sign: Sign::Plus,
                index: i,
            } => {
                if mu.0[i] == 0 {
                    continue;
                }
                let mut target = mu.0.clone();
                target[i] -= 1;
                target[i - 1] += 1;
                let row = basis.position(&Composition(target)).unwrap();
                out.insert_add(row, col, q_integer(mu.0[i - 1] as u32 + 1));
            }
            Generator::Chevalley {
                sign: Sign::Minus,
                index: i,
            } => {
                if mu.0[i - 1] == 0 {
                    continue;
                }
                let mut target = mu.0.clone();
                target[i - 1] -= 1;
                target[i] += 1;
                let row = basis.position(&Composition(target)).unwrap();
                out.insert_add(row, col, q_integer(mu.0[i] as u32 + 1));
            }
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// Modules: evaluation contexts for formal expressions
// ---------------------------------------------------------------------------

/// A concrete representation to evaluate expressions in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Module {
    /// V^{tensor m} through the m-fold (possibly reversed) coproduct.
    Tensor {
        levels: usize,
        factors: usize,
        reversed: bool,
    },
    /// The closed-form normalized symmetric representation.
    Symmetric { levels: usize, particles: usize },
    /// The symmetric subspace in the M(mu) basis, generators obtained by
    /// restricting the m-fold coproduct.
    SymRestricted { levels: usize, particles: usize },
}

impl Module {
    pub fn tensor(factors: usize, levels: usize) -> Self {
        Module::Tensor {
            levels,
            factors,
            reversed: false,
        }
    }

    pub fn space(&self) -> RepSpace {
        match *self {
            Module::Tensor {
                levels, factors, ..
            } => RepSpace::Tensor { levels, factors },
            Module::Symmetric { levels, particles }
            | Module::SymRestricted { levels, particles } => {
                RepSpace::Sym { levels, particles }
            }
        }
    }

    pub fn levels(&self) -> usize {
        self.space().levels()
    }

    pub fn generator(&self, g: &Generator) -> Result<RepMatrix, RepError> {
        match *self {
            Module::Tensor {
                levels,
                factors,
                reversed,
            } => coproduct_matrix(g, factors, levels, reversed),
            Module::Symmetric { levels, particles } => exrep_generator(g, particles, levels),
            Module::SymRestricted { levels, particles } => {
                let raw = coproduct_matrix(g, particles, levels, false)?;
                restrict_to_sym(&raw, &sym_basis(particles, levels))
            }
        }
    }

    /// All generators with display names, for commutator sweeps.
    pub fn generators(&self) -> Vec<(String, RepMatrix)> {
        let n = self.levels();
        let mut out = Vec::new();
        for level in 0..=n {
            for half in [1i64, -1] {
                let g = Generator::Eps { level, half };
                let sign = if half > 0 { "+" } else { "-" };
                out.push((
                    format!("q^{{{sign}eps_{level}/2}}"),
                    self.generator(&g).unwrap(),
                ));
            }
        }
        for index in 1..=n {
            for sign in [Sign::Plus, Sign::Minus] {
                let g = Generator::Chevalley { sign, index };
                out.push((
                    format!("e_{{{},{index}}}", sign.as_str()),
                    self.generator(&g).unwrap(),
                ));
            }
        }
        out
    }

    /// Evaluate a formal expression: linear in terms, multiplicative on
    /// words, with dressed factors expanded through the generators.
    pub fn evaluate(&self, e: &AlgebraExpr) -> Result<RepMatrix, RepError> {
        let mut dressed_cache: HashMap<(usize, usize), RepMatrix> = HashMap::new();
        let mut out = RepMatrix::zero(self.space());
        for (coeff, word) in e.terms() {
            let m = self.evaluate_word(word, &mut dressed_cache)?;
            out = out.add(&m.scale(coeff));
        }
        Ok(out)
    }

    fn evaluate_word(
        &self,
        word: &Word,
        dressed_cache: &mut HashMap<(usize, usize), RepMatrix>,
    ) -> Result<RepMatrix, RepError> {
        let mut acc = RepMatrix::identity(self.space());
        for &(level, half) in word.cartan() {
            let g = self.generator(&Generator::Eps { level, half })?;
            acc = acc.mul(&g);
        }
        for f in word.tail() {
            let m = match *f {
                WordFactor::Gen { sign, index } => {
                    self.generator(&Generator::Chevalley { sign, index })?
                }
                WordFactor::Dressed { i, j } => {
                    let n = self.levels();
                    if i > n || j > n {
                        return Err(RepError::IndexOutOfRange {
                            index: i.max(j),
                            bound: n,
                        });
                    }
                    match dressed_cache.get(&(i, j)) {
                        Some(m) => m.clone(),
                        None => {
                            let m = self.evaluate(&dressed_root(i, j))?;
                            dressed_cache.insert((i, j), m.clone());
                            m
                        }
                    }
                }
            };
            acc = acc.mul(&m);
        }
        Ok(acc)
    }
}

// ---------------------------------------------------------------------------
// JSON form of matrices
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(tag = "kind")]
enum SpaceJson {
    #[serde(rename = "tensorPower")]
    Tensor {
        #[serde(rename = "N")]
        n: usize,
        k: usize,
    },
    #[serde(rename = "symmetricPower")]
    Sym {
        #[serde(rename = "N")]
        n: usize,
        m: usize,
    },
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    space: SpaceJson,
    entries: Vec<(usize, usize, QScalar)>,
}

impl Serialize for RepMatrix {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let space = match self.space {
            RepSpace::Tensor { levels, factors } => SpaceJson::Tensor {
                n: levels,
                k: factors,
            },
            RepSpace::Sym { levels, particles } => SpaceJson::Sym {
                n: levels,
                m: particles,
            },
        };
        let entries = self
            .entries
            .iter()
            .map(|(&(r, c), v)| (r, c, v.clone()))
            .collect();
        MatrixJson { space, entries }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RepMatrix {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = MatrixJson::deserialize(deserializer)?;
        let space = match raw.space {
            SpaceJson::Tensor { n, k } => {
                if n > 16 || k > 12 {
                    return Err(D::Error::custom("space too large"));
                }
                RepSpace::Tensor {
                    levels: n,
                    factors: k,
                }
            }
            SpaceJson::Sym { n, m } => {
                if n > 16 || m > 16 {
                    return Err(D::Error::custom("space too large"));
                }
                RepSpace::Sym {
                    levels: n,
                    particles: m,
                }
            }
        };
        let dim = space.dim();
        let mut out = RepMatrix::zero(space);
        let mut last: Option<(usize, usize)> = None;
        for (r, c, v) in raw.entries {
            if r >= dim || c >= dim {
                return Err(D::Error::custom(format!(
                    "entry ({r},{c}) outside dimension {dim}"
                )));
            }
            if let Some(prev) = last {
                if (r, c) <= prev {
                    return Err(D::Error::custom("entries must be sorted by (row, col)"));
                }
            }
            last = Some((r, c));
            if v.is_zero() {
                return Err(D::Error::custom("zero entry stored"));
            }
            out.entries.insert((r, c), v);
        }
        Ok(out)
    }
}

impl RepMatrix {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("matrix serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}
