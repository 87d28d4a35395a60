//! Formal algebra layer: ordered words in the Chevalley generators and the
//! Cartan-dressed root vectors, the coset-symmetrized root products, and
//! assembly of the closed-form central elements.
//!
//! Words are stored exactly as constructed; the algebra is noncommutative
//! and no normal form is imposed. The single exception is that Cartan
//! factors q^{h eps_i/2} are commuted to the front of each word using the
//! exact weight commutation rule, which is the only rewriting performed.
//! All equality questions beyond that are settled by exact evaluation in
//! faithful representations (see the `representations` module).

use std::collections::HashMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::combinatorics::{coset_reps, enumerate_weakly_increasing, MultiIndex, Permutation};
use crate::scalars::QScalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("root vectors are defined for distinct indices only")]
    DiagonalRootVector,
    #[error("multi-index must be weakly increasing")]
    NotSorted,
    #[error("multi-index lengths differ")]
    LengthMismatch,
}

/// Raising or lowering flavor, also the sign used in the guarded root-word
/// products.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// A non-Cartan word factor.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum WordFactor {
    /// Chevalley generator ê_{±,index}, 1 <= index <= N.
    Gen { sign: Sign, index: usize },
    /// Cartan-dressed root vector Ê_{ij} (diagonal allowed).
    Dressed { i: usize, j: usize },
}

impl WordFactor {
    /// Coefficient of eps_level in the weight of the factor: conjugating by
    /// q^{eps_level/2} multiplies the factor by q^{delta/2}.
    fn weight_delta(&self, level: usize) -> i64 {
        let ind = |b: bool| i64::from(b);
        match *self {
            WordFactor::Gen {
                sign: Sign::Plus,
                index,
            } => ind(level + 1 == index) - ind(level == index),
            WordFactor::Gen {
                sign: Sign::Minus,
                index,
            } => ind(level == index) - ind(level + 1 == index),
            WordFactor::Dressed { i, j } => ind(level == i) - ind(level == j),
        }
    }
}

/// An ordered word: a Cartan prefix q^{h_0 eps_{l_0}/2} ... followed by the
/// non-Cartan factors in order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    /// (level, half-steps), sorted by level, no zero entries.
    cartan: Vec<(usize, i64)>,
    tail: Vec<WordFactor>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_tail(tail: Vec<WordFactor>) -> Self {
        Word {
            cartan: Vec::new(),
            tail,
        }
    }

    pub fn eps(level: usize, half: i64) -> Self {
        let mut w = Word::empty();
        w.merge_eps(level, half);
        w
    }

    pub fn cartan(&self) -> &[(usize, i64)] {
        &self.cartan
    }

    pub fn tail(&self) -> &[WordFactor] {
        &self.tail
    }

    pub fn push_factor(&mut self, f: WordFactor) {
        self.tail.push(f);
    }

    pub fn is_empty(&self) -> bool {
        self.cartan.is_empty() && self.tail.is_empty()
    }

    fn merge_eps(&mut self, level: usize, half: i64) {
        if half == 0 {
            return;
        }
        match self.cartan.binary_search_by_key(&level, |e| e.0) {
            Ok(pos) => {
                self.cartan[pos].1 += half;
                if self.cartan[pos].1 == 0 {
                    self.cartan.remove(pos);
                }
            }
            Err(pos) => self.cartan.insert(pos, (level, half)),
        }
    }

    /// Concatenate, commuting the right word's Cartan prefix to the front.
    /// Returns the picked-up power of s together with the combined word.
    pub fn concat(&self, other: &Word) -> (i64, Word) {
        let mut s_exp = 0i64;
        for &(level, half) in &other.cartan {
            for f in &self.tail {
                s_exp -= half * f.weight_delta(level);
            }
        }
        let mut out = self.clone();
        for &(level, half) in &other.cartan {
            out.merge_eps(level, half);
        }
        out.tail.extend(other.tail.iter().copied());
        (s_exp, out)
    }
}

/// A formal sum of scalar-weighted ordered words.
///
/// Terms are kept in construction order; identical words are merged and
/// terms whose coefficient cancels to zero are skipped by all observers.
#[derive(Clone, Default)]
pub struct AlgebraExpr {
    terms: Vec<(QScalar, Word)>,
    index: HashMap<Word, usize>,
}

impl AlgebraExpr {
    pub fn zero() -> Self {
        AlgebraExpr::default()
    }

    pub fn one() -> Self {
        Self::from_term(QScalar::one(), Word::empty())
    }

    pub fn from_term(coeff: QScalar, word: Word) -> Self {
        let mut e = AlgebraExpr::default();
        e.add_term(coeff, word);
        e
    }

    pub fn add_term(&mut self, coeff: QScalar, word: Word) {
        if coeff.is_zero() {
            return;
        }
        match self.index.get(&word) {
            Some(&pos) => {
                self.terms[pos].0 = self.terms[pos].0.add(&coeff);
            }
            None => {
                self.index.insert(word.clone(), self.terms.len());
                self.terms.push((coeff, word));
            }
        }
    }

    /// Live terms, in construction order.
    pub fn terms(&self) -> impl Iterator<Item = (&QScalar, &Word)> {
        self.terms
            .iter()
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, w)| (c, w))
    }

    pub fn term_count(&self) -> usize {
        self.terms().count()
    }

    pub fn is_zero(&self) -> bool {
        self.terms().next().is_none()
    }

    pub fn add(&self, other: &AlgebraExpr) -> AlgebraExpr {
        let mut out = self.clone();
        for (c, w) in other.terms() {
            out.add_term(c.clone(), w.clone());
        }
        out
    }

    pub fn scale(&self, c: &QScalar) -> AlgebraExpr {
        let mut out = AlgebraExpr::default();
        for (k, w) in self.terms() {
            out.add_term(k.mul(c), w.clone());
        }
        out
    }

    pub fn neg(&self) -> AlgebraExpr {
        let mut out = AlgebraExpr::default();
        for (k, w) in self.terms() {
            out.add_term(k.neg(), w.clone());
        }
        out
    }

    pub fn sub(&self, other: &AlgebraExpr) -> AlgebraExpr {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &AlgebraExpr) -> AlgebraExpr {
        let mut out = AlgebraExpr::default();
        for (c1, w1) in self.terms() {
            for (c2, w2) in other.terms() {
                let (s_exp, w) = w1.concat(w2);
                out.add_term(c1.mul(c2).mul_s_power(s_exp), w);
            }
        }
        out
    }

    /// Evaluate the one-dimensional character sending every Chevalley
    /// generator to 0 and every q^{eps_i/2} to 1. Diagonal dressed factors
    /// contribute their 1/(q - q^{-1}) prefactor.
    pub fn trivial_character(&self) -> QScalar {
        let mut total = QScalar::zero();
        'terms: for (c, w) in self.terms() {
            let mut value = c.clone();
            for f in &w.tail {
                match f {
                    WordFactor::Dressed { i, j } if i == j => {
                        value = value.mul(&QScalar::inv_q_minus_q_inv_pow(1));
                    }
                    _ => continue 'terms,
                }
            }
            total = total.add(&value);
        }
        total
    }
}

impl PartialEq for AlgebraExpr {
    fn eq(&self, other: &Self) -> bool {
        self.terms().eq(other.terms())
    }
}

impl Eq for AlgebraExpr {}

impl fmt::Debug for AlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Root-vector recursion family: the primed vectors from the spectral
/// R-matrix entries, and the modified vectors used by the dressed form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RootVariant {
    Primed,
    Modified,
}

/// Fully expand the root vector E_{ij} as a word-sum in the Chevalley
/// generators. The recursion pivot is k = j-1 for i < j and k = j+1 for
/// i > j, which fixes a deterministic expansion.
pub fn root_vector_expand(
    i: usize,
    j: usize,
    variant: RootVariant,
) -> Result<AlgebraExpr, ExprError> {
    if i == j {
        return Err(ExprError::DiagonalRootVector);
    }
    Ok(root_vector_expand_inner(i, j, variant))
}

fn root_vector_expand_inner(i: usize, j: usize, variant: RootVariant) -> AlgebraExpr {
    debug_assert_ne!(i, j);
    if j == i + 1 {
        return AlgebraExpr::from_term(
            QScalar::one(),
            Word::from_tail(vec![WordFactor::Gen {
                sign: Sign::Plus,
                index: j,
            }]),
        );
    }
    if i == j + 1 {
        return AlgebraExpr::from_term(
            QScalar::one(),
            Word::from_tail(vec![WordFactor::Gen {
                sign: Sign::Minus,
                index: i,
            }]),
        );
    }
    let (pivot, q_exp) = if i < j {
        let e = match variant {
            RootVariant::Primed => 1,
            RootVariant::Modified => -1,
        };
        (j - 1, e)
    } else {
        (j + 1, -1)
    };
    let a = root_vector_expand_inner(i, pivot, variant);
    let b = root_vector_expand_inner(pivot, j, variant);
    let cross = b.mul(&a).scale(&QScalar::q_power(q_exp).neg());
    a.mul(&b).add(&cross)
}

/// The Cartan-dressed root vector Ê_{ij}, expanded over the generators:
/// off the diagonal it is q^{(eps_i + eps_j - 1)/2} E_{ij} with E the
/// modified root vector; on the diagonal it is q^{eps_i}/(q - q^{-1}).
pub fn dressed_root(i: usize, j: usize) -> AlgebraExpr {
    if i == j {
        return AlgebraExpr::from_term(QScalar::inv_q_minus_q_inv_pow(1), Word::eps(i, 2));
    }
    let prefix = AlgebraExpr::from_term(QScalar::s_power(-1), {
        let mut w = Word::eps(i, 1);
        w.merge_eps(j, 1);
        w
    });
    prefix.mul(&root_vector_expand_inner(i, j, RootVariant::Modified))
}

/// The guarded product Ê^{±}_{ab} = Ê_{a_1 b_1} ... Ê_{a_m b_m}, which is
/// zero unless every ±(a_k - b_k) >= 0.
pub fn guarded_root_word(a: &[usize], b: &[usize], sign: Sign) -> Option<Word> {
    debug_assert_eq!(a.len(), b.len());
    let ok = a.iter().zip(b).all(|(&x, &y)| match sign {
        Sign::Plus => x >= y,
        Sign::Minus => x <= y,
    });
    if !ok {
        return None;
    }
    Some(Word::from_tail(
        a.iter()
            .zip(b)
            .map(|(&x, &y)| WordFactor::Dressed { i: x, j: y })
            .collect(),
    ))
}

/// The coset-symmetrized root product: the sum over minimal coset
/// representatives zeta of the stabilizer of `i` of q^{∓inv(zeta)} times
/// the guarded word indexed by the reversed actions of zeta and of the
/// identity representative of `j`. Words violating the sign guard are
/// dropped; the result can be the zero expression.
pub fn fused_root_product(
    i: &MultiIndex,
    j: &MultiIndex,
    sign: Sign,
) -> Result<AlgebraExpr, ExprError> {
    if !i.is_weakly_increasing() || !j.is_weakly_increasing() {
        return Err(ExprError::NotSorted);
    }
    if i.len() != j.len() {
        return Err(ExprError::LengthMismatch);
    }
    let m = i.len();
    let tau_bar = Permutation::identity(m).reversed();
    let j_rev = tau_bar.act(&j.0);
    let mut out = AlgebraExpr::zero();
    for zeta in &coset_reps(i).reps {
        let upper = zeta.reversed().act(&i.0);
        if let Some(word) = guarded_root_word(&upper, &j_rev, sign) {
            let inv = zeta.inversions() as i64;
            let coeff = match sign {
                Sign::Plus => QScalar::s_power(-2 * inv),
                Sign::Minus => QScalar::s_power(2 * inv),
            };
            out.add_term(coeff, word);
        }
    }
    Ok(out)
}

/// One summand of a central element: the index pair, its q-power weight and
/// the two symmetrized root products.
#[derive(Clone, Debug)]
pub struct CentralSummand {
    pub i: MultiIndex,
    pub j: MultiIndex,
    pub coeff: QScalar,
    pub minus: AlgebraExpr,
    pub plus: AlgebraExpr,
}

/// The central element C_m of U_q(gl(N+1)) in summand-structured form: the
/// double sum over weakly increasing index pairs (i, j) of
/// q^{2(i_1 + ... + i_m) - N m} Ẽ^-_{ji} Ẽ^+_{ij}, vanishing pairs dropped.
#[derive(Clone, Debug)]
pub struct CentralElement {
    pub m: usize,
    pub n: usize,
    pub summands: Vec<CentralSummand>,
}

pub fn central_element(m: usize, n: usize) -> CentralElement {
    assert!(m >= 1 && n >= 1, "need m >= 1 and N >= 1");
    let indices = enumerate_weakly_increasing(m, n);
    let mut summands = Vec::new();
    for i in &indices {
        for j in &indices {
            let minus = fused_root_product(j, i, Sign::Minus).unwrap();
            if minus.is_zero() {
                continue;
            }
            let plus = fused_root_product(i, j, Sign::Plus).unwrap();
            if plus.is_zero() {
                continue;
            }
            let q_exp = 2 * i.entry_sum() as i64 - (n * m) as i64;
            summands.push(CentralSummand {
                i: i.clone(),
                j: j.clone(),
                coeff: QScalar::q_power(q_exp),
                minus,
                plus,
            });
        }
    }
    CentralElement { m, n, summands }
}

/// The census of the nonvanishing summands of C_2, bucketed the way the
/// m = 2 expansion groups them.
#[derive(Debug, PartialEq, Eq)]
pub struct SummandCensus {
    /// both indices constant
    pub both_constant: usize,
    /// exactly one index constant
    pub one_constant: usize,
    /// j_1 <= i_1 < j_2 <= i_2
    pub interleaved: usize,
    /// j_1 < j_2 <= i_1 < i_2
    pub nested: usize,
}

impl CentralElement {
    /// Number of nonvanishing summands (pairs (i, j) with orientation).
    pub fn summand_count(&self) -> usize {
        self.summands.len()
    }

    /// The fully merged expression.
    pub fn expression(&self) -> AlgebraExpr {
        let mut out = AlgebraExpr::zero();
        for s in &self.summands {
            out = out.add(&s.minus.mul(&s.plus).scale(&s.coeff));
        }
        out
    }

    /// Index-pattern census of the summands; defined for m = 2 only.
    pub fn census(&self) -> Option<SummandCensus> {
        if self.m != 2 {
            return None;
        }
        let mut census = SummandCensus {
            both_constant: 0,
            one_constant: 0,
            interleaved: 0,
            nested: 0,
        };
        for s in &self.summands {
            let (i1, i2) = (s.i.0[0], s.i.0[1]);
            let (j1, j2) = (s.j.0[0], s.j.0[1]);
            match (i1 == i2, j1 == j2) {
                (true, true) => census.both_constant += 1,
                (true, false) | (false, true) => census.one_constant += 1,
                (false, false) => {
                    if j2 <= i1 {
                        census.nested += 1;
                    } else {
                        census.interleaved += 1;
                    }
                }
            }
        }
        Some(census)
    }

    /// Unordered index sets {i, j} whose summand vanishes in both
    /// orientations, each reported as a lexicographically ordered pair.
    pub fn vanishing_pairs(&self) -> Vec<(MultiIndex, MultiIndex)> {
        let indices = enumerate_weakly_increasing(self.m, self.n);
        let mut out = Vec::new();
        for (a, i) in indices.iter().enumerate() {
            for j in &indices[a..] {
                let fwd = !fused_root_product(j, i, Sign::Minus).unwrap().is_zero()
                    && !fused_root_product(i, j, Sign::Plus).unwrap().is_zero();
                let bwd = !fused_root_product(i, j, Sign::Minus).unwrap().is_zero()
                    && !fused_root_product(j, i, Sign::Plus).unwrap().is_zero();
                if !fwd && !bwd {
                    out.push((i.clone(), j.clone()));
                }
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Rendering: text and LaTeX
// ---------------------------------------------------------------------------

fn eps_text(level: usize, half: i64, latex: bool) -> String {
    let eps = if latex {
        format!("\\epsilon_{{{level}}}")
    } else {
        format!("ε_{level}")
    };
    if half % 2 == 0 {
        match half / 2 {
            1 => format!("q^{{{eps}}}"),
            -1 => format!("q^{{-{eps}}}"),
            c => format!("q^{{{c}{eps}}}"),
        }
    } else {
        match half {
            1 => format!("q^{{{eps}/2}}"),
            -1 => format!("q^{{-{eps}/2}}"),
            h => format!("q^{{{h}{eps}/2}}"),
        }
    }
}

fn factor_text(f: &WordFactor, latex: bool) -> String {
    match f {
        WordFactor::Gen { sign, index } => {
            if latex {
                format!("\\hat{{e}}_{{{},{index}}}", sign.as_str())
            } else {
                format!("ê_{{{},{index}}}", sign.as_str())
            }
        }
        WordFactor::Dressed { i, j } => {
            let idx = if *i < 10 && *j < 10 {
                format!("{i}{j}")
            } else {
                format!("{i},{j}")
            };
            if latex {
                format!("\\hat{{E}}_{{{idx}}}")
            } else {
                format!("Ê_{{{idx}}}")
            }
        }
    }
}

fn word_text(w: &Word, latex: bool) -> String {
    let mut parts: Vec<String> = w
        .cartan
        .iter()
        .map(|&(l, h)| eps_text(l, h, latex))
        .collect();
    parts.extend(w.tail.iter().map(|f| factor_text(f, latex)));
    parts.join(" ")
}

fn q_power_text(e: i64) -> String {
    if e == 2 {
        "q".to_string()
    } else if e % 2 == 0 {
        format!("q^{{{}}}", e / 2)
    } else {
        format!("q^{{{e}/2}}")
    }
}

/// Render one term: numerator coefficient, word, then the localized
/// denominator, e.g. `q^{ε_0}/(q-q^{-1})`.
fn term_text(coeff: &QScalar, word: &Word, latex: bool) -> String {
    use num_traits::{One, Signed};
    if word.is_empty() {
        return format!("{coeff}");
    }
    let num = coeff.numerator();
    let k = coeff.denom_pow();
    let mut s = String::new();
    if num.is_one() {
        // coefficient one is silent
    } else if let Some((e, c)) = num.as_monomial() {
        if c.is_one() && e != 0 {
            s.push_str(&q_power_text(e));
            s.push(' ');
        } else if (-c.clone()).is_one() && e != 0 {
            s.push('-');
            s.push_str(&q_power_text(e));
            s.push(' ');
        } else if e == 0 {
            if c.is_negative() {
                s.push_str(&format!("-{} ", c.abs()));
            } else {
                s.push_str(&format!("{c} "));
            }
        } else {
            s.push_str(&format!("{num} "));
        }
    } else {
        s.push_str(&format!("({num}) "));
    }
    s.push_str(&word_text(word, latex));
    if k == 1 {
        s.push_str("/(q-q^{-1})");
    } else if k > 1 {
        s.push_str(&format!("/(q-q^{{-1}})^{k}"));
    }
    s
}

impl AlgebraExpr {
    pub fn to_text(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (c, w)) in self.terms().enumerate() {
            let t = term_text(c, w, latex);
            if idx == 0 {
                out.push_str(&t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&t);
            }
        }
        out
    }
}

impl CentralElement {
    pub fn to_text(&self) -> String {
        self.render(false)
    }

    pub fn to_latex(&self) -> String {
        self.render(true)
    }

    fn render(&self, latex: bool) -> String {
        let mut out = String::new();
        for (idx, s) in self.summands.iter().enumerate() {
            if idx > 0 {
                out.push_str("\n + ");
            }
            let coeff = term_text(&s.coeff, &Word::empty(), latex);
            let (lp, rp) = if latex {
                ("\\left(", "\\right)")
            } else {
                ("(", ")")
            };
            out.push_str(&format!(
                "{coeff} {lp}{}{rp} {lp}{}{rp}",
                s.minus.render(latex),
                s.plus.render(latex)
            ));
        }
        out
    }
}

// ---------------------------------------------------------------------------
// JSON forms
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(tag = "type")]
enum WordItemJson {
    #[serde(rename = "eps")]
    Eps { i: usize, half: i64 },
    #[serde(rename = "e")]
    E { sign: String, i: usize },
    #[serde(rename = "hatE")]
    HatE { i: usize, j: usize },
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: QScalar,
    word: Vec<WordItemJson>,
}

#[derive(Serialize, Deserialize)]
struct ExprJson {
    terms: Vec<TermJson>,
}

fn word_to_items(w: &Word) -> Vec<WordItemJson> {
    let mut items: Vec<WordItemJson> = w
        .cartan
        .iter()
        .map(|&(l, h)| WordItemJson::Eps { i: l, half: h })
        .collect();
    for f in &w.tail {
        items.push(match *f {
            WordFactor::Gen { sign, index } => WordItemJson::E {
                sign: sign.as_str().to_string(),
                i: index,
            },
            WordFactor::Dressed { i, j } => WordItemJson::HatE { i, j },
        });
    }
    items
}

fn word_from_items(items: &[WordItemJson]) -> Result<Word, String> {
    let mut w = Word::empty();
    for item in items {
        match item {
            WordItemJson::Eps { i, half } => {
                if !w.tail.is_empty() {
                    return Err("eps factor after a non-Cartan factor".to_string());
                }
                w.merge_eps(*i, *half);
            }
            WordItemJson::E { sign, i } => {
                let sign = match sign.as_str() {
                    "+" => Sign::Plus,
                    "-" => Sign::Minus,
                    other => return Err(format!("bad sign {other:?}")),
                };
                if *i == 0 {
                    return Err("generator index must be >= 1".to_string());
                }
                w.tail.push(WordFactor::Gen { sign, index: *i });
            }
            WordItemJson::HatE { i, j } => {
                w.tail.push(WordFactor::Dressed { i: *i, j: *j });
            }
        }
    }
    Ok(w)
}

impl Serialize for AlgebraExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .map(|(c, w)| TermJson {
                coeff: c.clone(),
                word: word_to_items(w),
            })
            .collect();
        ExprJson { terms }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraExpr {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ExprJson::deserialize(deserializer)?;
        let mut out = AlgebraExpr::zero();
        for t in raw.terms {
            let w = word_from_items(&t.word).map_err(D::Error::custom)?;
            out.add_term(t.coeff, w);
        }
        Ok(out)
    }
}

impl AlgebraExpr {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("expression serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

#[derive(Serialize, Deserialize)]
struct CentralSummandJson {
    i: Vec<usize>,
    j: Vec<usize>,
    coeff: QScalar,
    minus: AlgebraExpr,
    plus: AlgebraExpr,
}

#[derive(Serialize, Deserialize)]
struct CentralJson {
    m: usize,
    #[serde(rename = "N")]
    n: usize,
    terms: Vec<CentralSummandJson>,
}

impl Serialize for CentralElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .summands
            .iter()
            .map(|s| CentralSummandJson {
                i: s.i.0.clone(),
                j: s.j.0.clone(),
                coeff: s.coeff.clone(),
                minus: s.minus.clone(),
                plus: s.plus.clone(),
            })
            .collect();
        CentralJson {
            m: self.m,
            n: self.n,
            terms,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CentralElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = CentralJson::deserialize(deserializer)?;
        let summands = raw
            .terms
            .into_iter()
            .map(|t| CentralSummand {
                i: MultiIndex(t.i),
                j: MultiIndex(t.j),
                coeff: t.coeff,
                minus: t.minus,
                plus: t.plus,
            })
            .collect();
        Ok(CentralElement {
            m: raw.m,
            n: raw.n,
            summands,
        })
    }
}

impl CentralElement {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("serialization cannot fail")
    }

    pub fn from_json_str(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }
}

/// Expand every dressed factor into its generator expression, multiplying
/// the words out with Cartan fronting.
pub fn expand_dressed(e: &AlgebraExpr) -> AlgebraExpr {
    let mut out = AlgebraExpr::zero();
    for (c, w) in e.terms() {
        let mut acc = AlgebraExpr::from_term(c.clone(), {
            let mut head = Word::empty();
            for &(l, h) in w.cartan() {
                head.merge_eps(l, h);
            }
            head
        });
        for f in w.tail() {
            let factor_expr = match *f {
                WordFactor::Gen { sign, index } => AlgebraExpr::from_term(
                    QScalar::one(),
                    Word::from_tail(vec![WordFactor::Gen { sign, index }]),
                ),
                WordFactor::Dressed { i, j } => dressed_root(i, j),
            };
            acc = acc.mul(&factor_expr);
        }
        out = out.add(&acc);
    }
    out
}
