//! Symmetric-group machinery: actions on sequences, inversion counts,
//! minimal-inversion coset representatives, the stabilizer decomposition,
//! reversal, and the multi-index / occupation-vector dictionary.
//!
//! Conventions. Permutations are 1-based, matching the classical one-line
//! notation: `sigma.apply(k)` is the image of position k. A permutation acts
//! on a sequence by `sigma(x)_k = x_{sigma(k)}`. Products read left to
//! right: `(sigma.then(tau))(k) = tau(sigma(k))`, which makes the sequence
//! action a left action and puts the stabilizer factor of a decomposition
//! on the right.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CombinatoricsError {
    #[error("length mismatch: permutation degree {0}, sequence length {1}")]
    LengthMismatch(usize, usize),
    #[error("sequence of images is not a bijection")]
    NotABijection,
    #[error("multi-index is not weakly increasing")]
    NotSorted,
    #[error("multi-index entry {0} exceeds the level bound {1}")]
    LevelOutOfRange(usize, usize),
    #[error("permutation is not a minimal coset representative")]
    NotARepresentative,
}

/// An element of S_m in one-line notation, 1-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(m: usize) -> Self {
        Permutation {
            images: (1..=m).collect(),
        }
    }

    /// Build from 1-based images (sigma(1), ..., sigma(m)).
    pub fn from_images(images: Vec<usize>) -> Result<Self, CombinatoricsError> {
        let m = images.len();
        let mut seen = vec![false; m + 1];
        for &v in &images {
            if v < 1 || v > m || seen[v] {
                return Err(CombinatoricsError::NotABijection);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition (a b) in S_m, 1-based.
    pub fn transposition(m: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= m && b <= m && a != b);
        let mut images: Vec<usize> = (1..=m).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The product "self then other": k -> other(self(k)).
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Permutation {
            images: (1..=self.degree())
                .map(|k| other.apply(self.apply(k)))
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Number of pairs a < b with sigma(a) > sigma(b).
    pub fn inversions(&self) -> usize {
        let mut count = 0;
        for a in 0..self.images.len() {
            for b in a + 1..self.images.len() {
                if self.images[a] > self.images[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// The reversed permutation k -> sigma(m + 1 - k).
    pub fn reversed(&self) -> Permutation {
        let mut images = self.images.clone();
        images.reverse();
        Permutation { images }
    }

    /// Apply to a sequence: result_k = xs[sigma(k)].
    pub fn act<T: Clone>(&self, xs: &[T]) -> Vec<T> {
        assert_eq!(self.degree(), xs.len());
        self.images.iter().map(|&v| xs[v - 1].clone()).collect()
    }

    /// All of S_m in lexicographic one-line order.
    pub fn enumerate(m: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (1..=m).collect();
        loop {
            out.push(Permutation {
                images: cur.clone(),
            });
            if !next_permutation(&mut cur) {
                break;
            }
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Lexicographic next permutation of a sequence (with repeats allowed).
/// Returns false when the sequence is the last one.
fn next_permutation<T: Ord>(seq: &mut [T]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// A sequence of non-negative level indices (i_1, ..., i_m).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn entry_sum(&self) -> usize {
        self.0.iter().sum()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// An occupation vector (mu_0, ..., mu_N) with sum m.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn particle_count(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn levels(&self) -> usize {
        self.0.len() - 1
    }

    /// The weakly increasing multi-index with these occupation counts.
    pub fn sorted_index(&self) -> MultiIndex {
        let mut out = Vec::with_capacity(self.particle_count());
        for (level, &count) in self.0.iter().enumerate() {
            out.extend(std::iter::repeat(level).take(count));
        }
        MultiIndex(out)
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The stabilizer data of a base sequence: the order of H_A together with
/// the minimal-inversion representatives D_A of its left cosets.
#[derive(Clone, Debug)]
pub struct CosetSystem {
    pub base: MultiIndex,
    pub stabilizer_order: usize,
    pub reps: Vec<Permutation>,
}

/// The least-inversion permutation sending `base` to the rearrangement
/// `target` (positions of equal values matched in order).
fn minimal_rep_for_target(base: &[usize], target: &[usize]) -> Permutation {
    debug_assert_eq!(base.len(), target.len());
    let mut positions: HashMap<usize, std::collections::VecDeque<usize>> = HashMap::new();
    for (pos, &v) in base.iter().enumerate() {
        positions.entry(v).or_default().push_back(pos + 1);
    }
    let images = target
        .iter()
        .map(|v| {
            positions
                .get_mut(v)
                .and_then(|d| d.pop_front())
                .expect("target is a rearrangement of base")
        })
        .collect();
    Permutation { images }
}

/// Minimal-inversion coset representatives of the stabilizer of `a`.
///
/// One representative is produced per distinct rearrangement of `a`, so the
/// cost is |D_A| rather than m!; the full S_m scan survives as a test
/// oracle. Representatives are returned sorted by one-line notation.
pub fn coset_reps(a: &MultiIndex) -> CosetSystem {
    let m = a.len();
    let mut stabilizer_order = 1usize;
    {
        let mut counts: HashMap<usize, usize> = HashMap::new();
        for &v in &a.0 {
            *counts.entry(v).or_insert(0) += 1;
        }
        for (_, c) in counts {
            stabilizer_order *= (1..=c).product::<usize>();
        }
    }
    let mut sorted = a.0.clone();
    sorted.sort_unstable();
    let mut reps = Vec::new();
    loop {
        reps.push(minimal_rep_for_target(&a.0, &sorted));
        if !next_permutation(&mut sorted) {
            break;
        }
    }
    reps.sort();
    debug_assert_eq!(reps.len() * stabilizer_order, (1..=m).product::<usize>());
    CosetSystem {
        base: a.clone(),
        stabilizer_order,
        reps,
    }
}

/// Whether `sigma` is the minimal-inversion representative of its coset
/// relative to the stabilizer of `a`.
pub fn is_minimal_rep(sigma: &Permutation, a: &MultiIndex) -> bool {
    let image = sigma.act(&a.0);
    minimal_rep_for_target(&a.0, &image) == *sigma
}

/// Decompose tau = sigma . xi with sigma a minimal coset representative of
/// the stabilizer of the weakly increasing `i` and xi in the stabilizer.
/// Returns (sigma, xi, inv(xi)).
pub fn decompose(
    tau: &Permutation,
    i: &MultiIndex,
) -> Result<(Permutation, Permutation, usize), CombinatoricsError> {
    if !i.is_weakly_increasing() {
        return Err(CombinatoricsError::NotSorted);
    }
    if tau.degree() != i.len() {
        return Err(CombinatoricsError::LengthMismatch(tau.degree(), i.len()));
    }
    let image = tau.act(&i.0);
    let sigma = minimal_rep_for_target(&i.0, &image);
    let xi = sigma.inverse().then(tau);
    debug_assert_eq!(xi.act(&i.0), i.0, "stabilizer factor must fix the base");
    let d = xi.inversions();
    Ok((sigma, xi, d))
}

/// A path tau' = tau_0, ..., tau_l = tau inside D_A whose consecutive
/// quotients tau_{j+1} tau_j^{-1} are transpositions.
///
/// Built from descent-reduction words through the identity: every
/// reduced-word prefix of an element of D_A stays in D_A.
pub fn transposition_path(
    tau: &Permutation,
    tau_prime: &Permutation,
    a: &MultiIndex,
) -> Result<Vec<Permutation>, CombinatoricsError> {
    if !is_minimal_rep(tau, a) || !is_minimal_rep(tau_prime, a) {
        return Err(CombinatoricsError::NotARepresentative);
    }
    if tau == tau_prime {
        return Ok(vec![tau.clone()]);
    }
    let down_from_prime = descend_to_identity(tau_prime, a);
    let down_from_tau = descend_to_identity(tau, a);
    let mut path = down_from_prime;
    path.extend(down_from_tau.into_iter().rev().skip(1));
    Ok(path)
}

/// Descend sigma -> identity by adjacent entry swaps at descents, staying
/// inside D_A. Returns the path [sigma, ..., identity].
fn descend_to_identity(sigma: &Permutation, a: &MultiIndex) -> Vec<Permutation> {
    let mut path = vec![sigma.clone()];
    let mut cur = sigma.clone();
    while !cur.is_identity() {
        let mut stepped = false;
        for p in 0..cur.degree() - 1 {
            if cur.images[p] > cur.images[p + 1] {
                let mut next = cur.clone();
                next.images.swap(p, p + 1);
                if is_minimal_rep(&next, a) {
                    path.push(next.clone());
                    cur = next;
                    stepped = true;
                    break;
                }
            }
        }
        assert!(stepped, "descent reduction left the representative set");
    }
    path
}

/// Check the three path postconditions exactly.
pub fn is_valid_coset_path(
    path: &[Permutation],
    tau: &Permutation,
    tau_prime: &Permutation,
    a: &MultiIndex,
) -> bool {
    if path.is_empty() || path[0] != *tau_prime || path[path.len() - 1] != *tau {
        return false;
    }
    if !path.iter().all(|p| is_minimal_rep(p, a)) {
        return false;
    }
    path.windows(2).all(|w| {
        let quot = w[1].then(&w[0].inverse());
        let moved: Vec<usize> = (1..=quot.degree())
            .filter(|&k| quot.apply(k) != k)
            .collect();
        moved.len() == 2 && quot.apply(moved[0]) == moved[1]
    })
}

/// All weakly increasing multi-indices of length m with entries in 0..=n,
/// in lexicographic order.
pub fn enumerate_weakly_increasing(m: usize, n: usize) -> Vec<MultiIndex> {
    fn rec(m: usize, n: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
        if cur.len() == m {
            out.push(MultiIndex(cur.clone()));
            return;
        }
        for v in lo..=n {
            cur.push(v);
            rec(m, n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n, 0, &mut Vec::with_capacity(m), &mut out);
    out
}

/// All occupation vectors (mu_0, ..., mu_n) summing to m, lexicographic.
pub fn enumerate_compositions(m: usize, n: usize) -> Vec<Composition> {
    fn rec(remaining: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if slots == 1 {
            cur.push(remaining);
            out.push(Composition(cur.clone()));
            cur.pop();
            return;
        }
        for v in 0..=remaining {
            cur.push(v);
            rec(remaining - v, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, n + 1, &mut Vec::with_capacity(n + 1), &mut out);
    out
}

/// Occupation counts: mu_k = #{ l : i_l = k } for k = 0..=n.
pub fn occupations(i: &MultiIndex, n: usize) -> Result<Composition, CombinatoricsError> {
    let mut mu = vec![0usize; n + 1];
    for &v in &i.0 {
        if v > n {
            return Err(CombinatoricsError::LevelOutOfRange(v, n));
        }
        mu[v] += 1;
    }
    Ok(Composition(mu))
}

/// The pairing sum_k (2k - n) mu_k, the q-exponent of the quantum-trace
/// weight attached to the occupation vector.
pub fn rho_pairing(mu: &Composition, n: usize) -> i64 {
    debug_assert_eq!(mu.0.len(), n + 1);
    mu.0.iter()
        .enumerate()
        .map(|(k, &c)| (2 * k as i64 - n as i64) * c as i64)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: scan all of S_m, group by orbit image, keep the
    /// least-inversion element of each group.
    fn coset_reps_oracle(a: &MultiIndex) -> Vec<Permutation> {
        let mut best: HashMap<Vec<usize>, Permutation> = HashMap::new();
        for sigma in Permutation::enumerate(a.len()) {
            let image = sigma.act(&a.0);
            match best.get(&image) {
                Some(cur) if cur.inversions() <= sigma.inversions() => {}
                _ => {
                    best.insert(image, sigma);
                }
            }
        }
        let mut reps: Vec<Permutation> = best.into_values().collect();
        reps.sort();
        reps
    }

    fn cycle(m: usize, cyc: &[usize]) -> Permutation {
        let mut images: Vec<usize> = (1..=m).collect();
        for w in cyc.windows(2) {
            images[w[0] - 1] = w[1];
        }
        images[cyc[cyc.len() - 1] - 1] = cyc[0];
        Permutation::from_images(images).unwrap()
    }

    #[test]
    fn action_on_repeated_entries() {
        let a = MultiIndex(vec![3, 3, 3, 2, 2, 1]);
        let t34 = Permutation::transposition(6, 3, 4);
        assert_eq!(t34.act(&a.0), vec![3, 3, 2, 3, 2, 1]);
        let t35 = Permutation::transposition(6, 3, 5);
        assert_eq!(t35.act(&a.0), vec![3, 3, 2, 2, 3, 1]);
        let id = Permutation::identity(6);
        assert_eq!(id.act(&a.0), a.0);
    }

    #[test]
    fn representative_membership() {
        let a = MultiIndex(vec![3, 3, 3, 2, 2, 1]);
        assert!(is_minimal_rep(&Permutation::transposition(6, 3, 4), &a));
        let c134 = cycle(6, &[1, 3, 4]);
        assert!(!is_minimal_rep(&c134, &a));
        // (134) A = (34) A while (134) has more inversions
        assert_eq!(
            c134.act(&a.0),
            Permutation::transposition(6, 3, 4).act(&a.0)
        );
        assert!(c134.inversions() > Permutation::transposition(6, 3, 4).inversions());
        // (35) maps A to (3,3,2,2,3,1) but is beaten inside its own coset:
        // (45)(35) = [1,2,4,5,3,6] has the same image with 2 inversions
        // against 3, so (35) is not the representative.
        let t35 = Permutation::transposition(6, 3, 5);
        let better = Permutation::from_images(vec![1, 2, 4, 5, 3, 6]).unwrap();
        assert_eq!(t35.act(&a.0), vec![3, 3, 2, 2, 3, 1]);
        assert_eq!(better.act(&a.0), t35.act(&a.0));
        assert_eq!(better.inversions(), 2);
        assert_eq!(t35.inversions(), 3);
        assert!(!is_minimal_rep(&t35, &a));
        assert!(is_minimal_rep(&better, &a));
    }

    #[test]
    fn inversion_basics() {
        assert_eq!(Permutation::identity(5).inversions(), 0);
        assert_eq!(Permutation::transposition(5, 2, 3).inversions(), 1);
    }

    #[test]
    fn reversal_complements_inversions() {
        for m in 1..=6 {
            let total = m * (m - 1) / 2;
            for sigma in Permutation::enumerate(m) {
                assert_eq!(sigma.reversed().inversions(), total - sigma.inversions());
            }
        }
    }

    #[test]
    fn coset_reps_matches_oracle() {
        let bases = [
            vec![0],
            vec![0, 0],
            vec![0, 1],
            vec![1, 1, 2],
            vec![0, 1, 2],
            vec![2, 0, 1, 0],
            vec![1, 1, 1, 1],
            vec![0, 1, 0, 1],
            vec![3, 3, 1, 2, 1],
            vec![0, 0, 1, 1, 2],
        ];
        for base in bases {
            let a = MultiIndex(base);
            let system = coset_reps(&a);
            assert_eq!(system.reps, coset_reps_oracle(&a), "base {:?}", a);
            let m_fact: usize = (1..=a.len()).product();
            assert_eq!(system.reps.len() * system.stabilizer_order, m_fact);
            // distinct rearrangements, one per representative
            let mut images: Vec<Vec<usize>> = system.reps.iter().map(|s| s.act(&a.0)).collect();
            images.sort();
            images.dedup();
            assert_eq!(images.len(), system.reps.len());
        }
    }

    #[test]
    fn distinct_entries_give_full_group() {
        let a = MultiIndex(vec![0, 2, 5]);
        let system = coset_reps(&a);
        assert_eq!(system.reps.len(), 6);
        assert_eq!(system.stabilizer_order, 1);
    }

    #[test]
    fn rep_count_with_repeats() {
        let system = coset_reps(&MultiIndex(vec![1, 1, 2]));
        assert_eq!(system.reps.len(), 3);
        assert_eq!(system.stabilizer_order, 2);
    }

    #[test]
    fn inversions_add_over_stabilizer() {
        // inv(sigma xi) = inv(sigma) + inv(xi) for sigma in D_A, xi in H_A
        for base in [vec![0, 0, 1], vec![1, 1, 2, 2], vec![0, 0, 0, 1, 2]] {
            let a = MultiIndex(base);
            let system = coset_reps(&a);
            let stab: Vec<Permutation> = Permutation::enumerate(a.len())
                .into_iter()
                .filter(|s| s.act(&a.0) == a.0)
                .collect();
            assert_eq!(stab.len(), system.stabilizer_order);
            for sigma in &system.reps {
                for xi in &stab {
                    let prod = sigma.then(xi);
                    assert_eq!(
                        prod.inversions(),
                        sigma.inversions() + xi.inversions(),
                        "sigma {sigma} xi {xi}"
                    );
                }
            }
        }
    }

    #[test]
    fn decompose_identity_and_representatives() {
        let i = MultiIndex(vec![0, 0, 1]);
        let id = Permutation::identity(3);
        let (sigma, xi, d) = decompose(&id, &i).unwrap();
        assert!(sigma.is_identity() && xi.is_identity() && d == 0);
        for tau in coset_reps(&i).reps {
            let (sigma, xi, d) = decompose(&tau, &i).unwrap();
            assert_eq!(sigma, tau);
            assert!(xi.is_identity());
            assert_eq!(d, 0);
        }
    }

    #[test]
    fn decompose_swap_of_equal_entries() {
        let i = MultiIndex(vec![1, 1]);
        let s = Permutation::transposition(2, 1, 2);
        let (sigma, xi, d) = decompose(&s, &i).unwrap();
        assert!(sigma.is_identity());
        assert_eq!(xi, s);
        assert_eq!(d, 1);
    }

    #[test]
    fn decompose_is_the_unique_factorization() {
        for base in [vec![0, 0, 1], vec![0, 1, 1, 2], vec![0, 0, 1, 1]] {
            let i = MultiIndex(base);
            let m = i.len();
            let system = coset_reps(&i);
            let stab: Vec<Permutation> = Permutation::enumerate(m)
                .into_iter()
                .filter(|s| s.act(&i.0) == i.0)
                .collect();
            for tau in Permutation::enumerate(m) {
                let (sigma, xi, d) = decompose(&tau, &i).unwrap();
                assert_eq!(sigma.then(&xi), tau);
                assert!(system.reps.contains(&sigma));
                assert!(stab.contains(&xi));
                assert_eq!(d, xi.inversions());
                // uniqueness by scan
                let mut count = 0;
                for s in &system.reps {
                    for x in &stab {
                        if s.then(x) == tau {
                            count += 1;
                        }
                    }
                }
                assert_eq!(count, 1);
            }
        }
    }

    #[test]
    fn transposition_path_all_pairs_validate() {
        let a = MultiIndex(vec![0, 0, 1, 2]);
        let system = coset_reps(&a);
        for tau in &system.reps {
            let path = transposition_path(tau, tau, &a).unwrap();
            assert_eq!(path.len(), 1);
            assert!(is_valid_coset_path(&path, tau, tau, &a));
        }
        for tau in &system.reps {
            for tau_prime in &system.reps {
                let path = transposition_path(tau, tau_prime, &a).unwrap();
                assert!(
                    is_valid_coset_path(&path, tau, tau_prime, &a),
                    "tau {tau} tau' {tau_prime}"
                );
            }
        }
    }

    #[test]
    fn transposition_path_rejects_non_representatives() {
        let a = MultiIndex(vec![3, 3, 3, 2, 2, 1]);
        let bad = cycle(6, &[1, 3, 4]);
        let good = Permutation::transposition(6, 3, 4);
        assert_eq!(
            transposition_path(&bad, &good, &a),
            Err(CombinatoricsError::NotARepresentative)
        );
    }

    #[test]
    fn minimal_word_path_through_identity() {
        // For tau' = identity the path is the prefix chain of a reduced word.
        let a = MultiIndex(vec![0, 1, 1, 2]);
        let system = coset_reps(&a);
        let id = Permutation::identity(4);
        for tau in &system.reps {
            let path = transposition_path(tau, &id, &a).unwrap();
            assert_eq!(path.len(), tau.inversions() + 1);
            for w in path.windows(2) {
                assert_eq!(w[1].inversions(), w[0].inversions() + 1);
            }
        }
    }

    #[test]
    fn occupation_counts() {
        let i = MultiIndex(vec![2, 3]);
        assert_eq!(occupations(&i, 3).unwrap(), Composition(vec![0, 0, 1, 1]));
        let zeros = MultiIndex(vec![0, 0, 0, 0]);
        assert_eq!(occupations(&zeros, 2).unwrap(), Composition(vec![4, 0, 0]));
        assert_eq!(
            occupations(&i, 2),
            Err(CombinatoricsError::LevelOutOfRange(3, 2))
        );
    }

    #[test]
    fn occupation_round_trip() {
        for n in 0..=3 {
            for i in enumerate_weakly_increasing(3, n) {
                let mu = occupations(&i, n).unwrap();
                assert_eq!(mu.sorted_index(), i);
            }
        }
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_weakly_increasing(2, 3).len(), 10);
        assert_eq!(
            enumerate_weakly_increasing(1, 4),
            (0..=4).map(|v| MultiIndex(vec![v])).collect::<Vec<_>>()
        );
        // stars and bars: binomial(m + n, n)
        assert_eq!(enumerate_compositions(2, 3).len(), 10);
        assert_eq!(enumerate_compositions(3, 2).len(), 10);
        assert_eq!(enumerate_compositions(4, 1).len(), 5);
        let w = enumerate_weakly_increasing(2, 1);
        assert_eq!(
            w,
            vec![
                MultiIndex(vec![0, 0]),
                MultiIndex(vec![0, 1]),
                MultiIndex(vec![1, 1])
            ]
        );
    }

    #[test]
    fn rho_pairing_values() {
        let mu = Composition(vec![0, 0, 1, 1]);
        assert_eq!(rho_pairing(&mu, 3), 4);
        let lowest = Composition(vec![5, 0, 0]);
        assert_eq!(rho_pairing(&lowest, 2), -10);
    }

    #[test]
    fn rho_pairing_matches_index_sum() {
        // sum_k (2k - n) mu_k = -n m + 2 (i_1 + ... + i_m), exhaustively
        for n in 0..=4 {
            for i in enumerate_weakly_increasing(3, n) {
                let mu = occupations(&i, n).unwrap();
                let lhs = rho_pairing(&mu, n);
                let rhs = -(n as i64) * 3 + 2 * i.entry_sum() as i64;
                assert_eq!(lhs, rhs, "i {:?} n {n}", i);
            }
        }
    }
}
