//! Weyl groups of generalized Cartan matrices: element arithmetic on the
//! reflection representation, lengths, descents, Bruhat order, and parabolic
//! quotient combinatorics.
//!
//! Elements are identified by their integer matrix acting on simple-root
//! coordinates; the canonical reduced word (smallest left descent first,
//! recursively) is derived data. All operations are pure and every value is
//! immutable after construction, so everything here is safe to share across
//! threads.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::cartan::GeneralizedCartanMatrix;
use crate::error::{Error, Result};

/// Row-major n x n integer matrix; column j holds the simple-root
/// coordinates of the image of alpha_j.
type Mat = Vec<i64>;

fn mat_identity(n: usize) -> Mat {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

fn mat_mul(a: &Mat, b: &Mat, n: usize) -> Mat {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i * n + j] += aik * b[k * n + j];
            }
        }
    }
    out
}

fn is_mat_identity(m: &Mat, n: usize) -> bool {
    m.iter().enumerate().all(|(idx, &v)| v == i64::from(idx / n == idx % n))
}

/// The Coxeter system of a generalized Cartan matrix.
///
/// Cheap to clone: the underlying data is shared. Two independently built
/// systems with equal Cartan matrices are interchangeable.
#[derive(Clone)]
pub struct CoxeterSystem {
    inner: Arc<SystemData>,
}

struct SystemData {
    cartan: GeneralizedCartanMatrix,
    /// Coxeter matrix entries m_ij in {1,2,3,4,6}; 0 encodes infinity.
    coxeter_m: Vec<Vec<u8>>,
    /// Simple reflection matrices.
    refl: Vec<Mat>,
}

impl CoxeterSystem {
    /// Builds the system of a validated Cartan matrix. The Coxeter matrix is
    /// derived from the products a_ij * a_ji via 0,1,2,3 -> 2,3,4,6 and
    /// anything >= 4 -> infinity.
    pub fn new(cartan: GeneralizedCartanMatrix) -> Self {
        let n = cartan.rank();
        let mut coxeter_m = vec![vec![0u8; n]; n];
        for i in 0..n {
            for j in 0..n {
                coxeter_m[i][j] = if i == j {
                    1
                } else {
                    match cartan.entry(i, j) * cartan.entry(j, i) {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        _ => 0,
                    }
                };
            }
        }
        let refl = (0..n)
            .map(|i| {
                let mut m = mat_identity(n);
                for c in 0..n {
                    m[i * n + c] -= cartan.entry(i, c);
                }
                m
            })
            .collect();
        CoxeterSystem {
            inner: Arc::new(SystemData { cartan, coxeter_m, refl }),
        }
    }

    /// Validates raw entries and builds the system.
    pub fn from_entries(entries: Vec<Vec<i64>>) -> Result<Self> {
        Ok(Self::new(GeneralizedCartanMatrix::new(entries)?))
    }

    pub fn rank(&self) -> usize {
        self.inner.cartan.rank()
    }

    pub fn cartan(&self) -> &GeneralizedCartanMatrix {
        &self.inner.cartan
    }

    /// Coxeter matrix entry m_ij; 0 encodes infinity.
    pub fn coxeter_m(&self, i: usize, j: usize) -> u8 {
        self.inner.coxeter_m[i][j]
    }

    pub fn is_symmetrizable(&self) -> bool {
        self.inner.cartan.is_symmetrizable()
    }

    /// True iff both elements live in this system (shared data or equal GCM).
    pub fn same_system(&self, other: &CoxeterSystem) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.cartan == other.inner.cartan
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, rank: self.rank() })
        }
    }

    fn check_subset(&self, j_set: &[usize]) -> Result<()> {
        for &j in j_set {
            self.check_index(j)?;
        }
        Ok(())
    }

    /// The identity element.
    pub fn identity(&self) -> Element {
        let n = self.rank();
        Element {
            sys: self.clone(),
            mat: mat_identity(n),
            inv: mat_identity(n),
            word: Vec::new(),
        }
    }

    /// The simple reflection s_i.
    pub fn simple_reflection(&self, i: usize) -> Result<Element> {
        self.check_index(i)?;
        Ok(Element {
            sys: self.clone(),
            mat: self.inner.refl[i].clone(),
            inv: self.inner.refl[i].clone(),
            word: vec![i],
        })
    }

    /// Multiplies out a word of generator indices (not necessarily reduced).
    pub fn element_from_word(&self, word: &[usize]) -> Result<Element> {
        let mut w = self.identity();
        for &i in word {
            self.check_index(i)?;
            w = w.mul_gen(i);
        }
        Ok(w)
    }

    /// All elements of length <= max_length, grouped by exact length.
    /// Each layer is finite even when W is infinite, and is sorted by
    /// canonical word.
    pub fn elements_up_to_length(&self, max_length: usize) -> Vec<Vec<Element>> {
        self.layered_closure(&(0..self.rank()).collect::<Vec<_>>(), max_length, usize::MAX)
            .expect("unbounded closure cannot fail")
    }

    /// Elements of the standard parabolic subgroup W_J of length <= max_length,
    /// grouped by exact length. Lengths taken in W agree with lengths in W_J.
    pub fn subgroup_elements_up_to_length(
        &self,
        j_set: &[usize],
        max_length: usize,
    ) -> Result<Vec<Vec<Element>>> {
        self.check_subset(j_set)?;
        Ok(self
            .layered_closure(j_set, max_length, usize::MAX)
            .expect("unbounded closure cannot fail"))
    }

    /// BFS closure of W_J. Errors with `ParabolicInfinite` if more than `cap`
    /// elements appear before the subgroup closes.
    pub fn subgroup_closure(&self, j_set: &[usize], cap: usize) -> Result<Vec<Element>> {
        self.check_subset(j_set)?;
        let layers = self.layered_closure(j_set, usize::MAX, cap)?;
        Ok(layers.into_iter().flatten().collect())
    }

    /// The longest element w_J of a finite standard parabolic subgroup.
    pub fn longest_element_parabolic(&self, j_set: &[usize], cap: usize) -> Result<Element> {
        let all = self.subgroup_closure(j_set, cap)?;
        Ok(all.into_iter().max().expect("closure contains the identity"))
    }

    /// Layered BFS closure over the subgroup generated by `gens`, stopping
    /// after `max_length` layers or failing once more than `cap` elements
    /// have been produced without the subgroup closing.
    fn layered_closure(
        &self,
        gens: &[usize],
        max_length: usize,
        cap: usize,
    ) -> Result<Vec<Vec<Element>>> {
        let mut layers: Vec<Vec<Element>> = vec![vec![self.identity()]];
        let mut total = 1usize;
        while layers.len() <= max_length {
            let last = layers.last().unwrap();
            let mut next = BTreeSet::new();
            for w in last {
                for &i in gens {
                    if !w.right_descent_unchecked(i) {
                        next.insert(w.mul_gen(i));
                    }
                }
            }
            if next.is_empty() {
                return Ok(layers);
            }
            total += next.len();
            if total > cap {
                return Err(Error::ParabolicInfinite {
                    j: fmt_subset(gens),
                    cap,
                });
            }
            layers.push(next.into_iter().collect());
        }
        Ok(layers)
    }
}

impl fmt::Debug for CoxeterSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterSystem(rank {})", self.rank())
    }
}

fn fmt_subset(j_set: &[usize]) -> String {
    j_set
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A Weyl group element.
///
/// Identity, equality and hashing use the reflection-representation matrix;
/// the canonical ShortLex reduced word and the length are derived from it.
/// Ordering is by (length, canonical word), which makes collections of
/// elements iterate deterministically, shortest first.
#[derive(Clone)]
pub struct Element {
    sys: CoxeterSystem,
    mat: Mat,
    inv: Mat,
    word: Vec<usize>,
}

impl Element {
    /// Rebuilds the canonical word from a matrix pair by stripping the
    /// smallest left descent repeatedly.
    fn from_mats(sys: CoxeterSystem, mat: Mat, inv: Mat) -> Element {
        let n = sys.rank();
        let mut word = Vec::new();
        let mut m = mat.clone();
        let mut v = inv.clone();
        loop {
            // left descent i of w  <=>  column i of the matrix of w^{-1} is nonpositive
            match (0..n).find(|&i| col_nonpos(&v, n, i)) {
                None => break,
                Some(i) => {
                    word.push(i);
                    m = mat_mul(&sys.inner.refl[i], &m, n);
                    v = mat_mul(&v, &sys.inner.refl[i], n);
                }
            }
        }
        debug_assert!(is_mat_identity(&m, n), "descent stripping must reach the identity");
        debug_assert!(is_mat_identity(&v, n));
        Element { sys, mat, inv, word }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    /// The canonical ShortLex reduced word: its first letter is the smallest
    /// left descent, recursively.
    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }

    /// Comma-separated word form used in reports and on the command line;
    /// the identity prints as "e".
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "e".to_string()
        } else {
            fmt_subset(&self.word)
        }
    }

    pub fn inverse(&self) -> Element {
        Element::from_mats(self.sys.clone(), self.inv.clone(), self.mat.clone())
    }

    /// Group multiplication. Length and canonical word are recomputed from
    /// the product matrix; length is never assumed additive.
    pub fn multiply(&self, other: &Element) -> Result<Element> {
        if !self.sys.same_system(&other.sys) {
            return Err(Error::SystemMismatch);
        }
        let n = self.sys.rank();
        Ok(Element::from_mats(
            self.sys.clone(),
            mat_mul(&self.mat, &other.mat, n),
            mat_mul(&other.inv, &self.inv, n),
        ))
    }

    /// Right multiplication by s_i.
    pub fn mul_gen(&self, i: usize) -> Element {
        let n = self.sys.rank();
        let s = &self.sys.inner.refl[i];
        Element::from_mats(
            self.sys.clone(),
            mat_mul(&self.mat, s, n),
            mat_mul(s, &self.inv, n),
        )
    }

    /// Left multiplication by s_i.
    pub fn gen_mul(&self, i: usize) -> Element {
        let n = self.sys.rank();
        let s = &self.sys.inner.refl[i];
        Element::from_mats(
            self.sys.clone(),
            mat_mul(s, &self.mat, n),
            mat_mul(&self.inv, s, n),
        )
    }

    fn right_descent_unchecked(&self, i: usize) -> bool {
        let n = self.sys.rank();
        let down = col_nonpos(&self.mat, n, i);
        debug_assert!(
            down || col_nonneg(&self.mat, n, i),
            "image of a simple root must be a root"
        );
        down
    }

    fn left_descent_unchecked(&self, i: usize) -> bool {
        col_nonpos(&self.inv, self.sys.rank(), i)
    }

    /// True iff l(w s_i) < l(w), i.e. w sends alpha_i to a negative root.
    pub fn is_right_descent(&self, i: usize) -> Result<bool> {
        self.sys.check_index(i)?;
        Ok(self.right_descent_unchecked(i))
    }

    /// True iff l(s_i w) < l(w).
    pub fn is_left_descent(&self, i: usize) -> Result<bool> {
        self.sys.check_index(i)?;
        Ok(self.left_descent_unchecked(i))
    }

    pub fn right_descents(&self) -> Vec<usize> {
        (0..self.sys.rank())
            .filter(|&i| self.right_descent_unchecked(i))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.sys.rank())
            .filter(|&i| self.left_descent_unchecked(i))
            .collect()
    }

    pub fn smallest_left_descent(&self) -> Option<usize> {
        self.word.first().copied()
    }

    pub fn largest_left_descent(&self) -> Option<usize> {
        (0..self.sys.rank()).rev().find(|&i| self.left_descent_unchecked(i))
    }

    /// Bruhat order test by the standard descent recursion.
    pub fn bruhat_leq(&self, w: &Element) -> Result<bool> {
        if !self.sys.same_system(&w.sys) {
            return Err(Error::SystemMismatch);
        }
        let mut y = self.clone();
        let mut w = w.clone();
        Ok(loop {
            if y.length() > w.length() {
                break false;
            }
            if y.length() == w.length() {
                break y.mat == w.mat;
            }
            // here l(w) >= 1
            let i = w.smallest_left_descent().expect("w is not the identity");
            w = w.gen_mul(i);
            if y.left_descent_unchecked(i) {
                y = y.gen_mul(i);
            }
        })
    }

    /// The full lower Bruhat interval {y : y <= w}, computed by subword
    /// enumeration over the canonical word with deduplication, sorted by
    /// length then canonical word.
    pub fn bruhat_interval_below(&self) -> Vec<Element> {
        let mut seen = BTreeSet::new();
        seen.insert(self.sys.identity());
        for &i in &self.word {
            let grown: Vec<Element> = seen.iter().map(|x| x.mul_gen(i)).collect();
            seen.extend(grown);
        }
        seen.into_iter().collect()
    }

    /// Splits w = u * x with u in W^J, x in W_J and l(w) = l(u) + l(x),
    /// by greedily stripping right descents lying in J (smallest index first).
    pub fn parabolic_decompose(&self, j_set: &[usize]) -> (Element, Element) {
        let mut u = self.clone();
        let mut x = self.sys.identity();
        loop {
            match j_set.iter().copied().find(|&j| u.right_descent_unchecked(j)) {
                None => break,
                Some(j) => {
                    u = u.mul_gen(j);
                    x = x.gen_mul(j);
                }
            }
        }
        (u, x)
    }

    /// True iff no j in J is a right descent, i.e. w is the minimal-length
    /// representative of its coset w W_J.
    pub fn is_min_coset_rep(&self, j_set: &[usize]) -> bool {
        !j_set.iter().any(|&j| self.right_descent_unchecked(j))
    }
}

fn col_nonpos(m: &Mat, n: usize, col: usize) -> bool {
    (0..n).all(|r| m[r * n + col] <= 0)
}

fn col_nonneg(m: &Mat, n: usize, col: usize) -> bool {
    (0..n).all(|r| m[r * n + col] >= 0)
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for Element {}

impl Hash for Element {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl PartialOrd for Element {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Element {
    fn cmp(&self, other: &Self) -> Ordering {
        // ShortLex on canonical words; consistent with Eq because the
        // canonical word determines the element.
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.word_string())
    }
}
