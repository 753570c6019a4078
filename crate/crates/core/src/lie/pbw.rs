//! Elements of `U(g)^{⊗k}` in PBW normal form.

use std::cell::RefCell;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use num_traits::{One, Zero};

use super::algebra::LiePresentation;
use crate::exactlin::Scalar;

/// A word `x_{i₁}⋯x_{i_k}` in the basis of `g`.
pub type Word = Vec<usize>;

type Combo = Vec<(Word, Scalar)>;

/// A finite sum of pure tensors of words, `arity` tensor slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UTensor {
    pub arity: usize,
    pub terms: BTreeMap<Vec<Word>, Scalar>,
}

impl UTensor {
    pub fn zero(arity: usize) -> Self {
        UTensor { arity, terms: BTreeMap::new() }
    }

    /// `1⊗⋯⊗1`.
    pub fn one(arity: usize) -> Self {
        Self::monomial(vec![Vec::new(); arity], Scalar::one())
    }

    pub fn monomial(words: Vec<Word>, c: Scalar) -> Self {
        let mut t = Self::zero(words.len());
        t.add_term(words, c);
        t
    }

    /// `Σ r[i][j] x_i⊗x_j`.
    pub fn from_matrix(r: &[Vec<Scalar>]) -> Self {
        let mut t = Self::zero(2);
        for (i, row) in r.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                t.add_term(vec![vec![i], vec![j]], c.clone());
            }
        }
        t
    }

    /// Coefficients on `x_i⊗x_j` of the degree-(1,1) part.
    pub fn to_matrix(&self, dim: usize) -> Vec<Vec<Scalar>> {
        let mut m = vec![vec![Scalar::zero(); dim]; dim];
        for (w, c) in &self.terms {
            if w.len() == 2 && w[0].len() == 1 && w[1].len() == 1 {
                m[w[0][0]][w[1][0]] += c;
            }
        }
        m
    }

    pub fn add_term(&mut self, words: Vec<Word>, c: Scalar) {
        debug_assert_eq!(words.len(), self.arity);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(words) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        if s.is_zero() {
            return Self::zero(self.arity);
        }
        UTensor { arity: self.arity, terms: self.terms.iter().map(|(k, v)| (k.clone(), v * s)).collect() }
    }

    pub fn add(&self, other: &UTensor) -> Self {
        assert_eq!(self.arity, other.arity, "arity mismatch");
        let mut out = self.clone();
        for (k, v) in &other.terms {
            *out.terms.entry(k.clone()).or_insert_with(Scalar::zero) += v;
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn sub(&self, other: &UTensor) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// `τ` on a two-slot tensor.
    pub fn flip(&self) -> Self {
        assert_eq!(self.arity, 2);
        UTensor {
            arity: 2,
            terms: self.terms.iter().map(|(k, v)| (vec![k[1].clone(), k[0].clone()], v.clone())).collect(),
        }
    }

    /// Place the slots of `self` into slots `positions` of an `arity`-fold
    /// tensor, with `1` elsewhere (`r ↦ r₁₃` is `place(&[0, 2], 3)`).
    pub fn place(&self, positions: &[usize], arity: usize) -> Self {
        assert_eq!(positions.len(), self.arity);
        let mut out = Self::zero(arity);
        for (k, v) in &self.terms {
            let mut words = vec![Vec::new(); arity];
            for (slot, w) in positions.iter().zip(k) {
                words[*slot] = w.clone();
            }
            out.add_term(words, v.clone());
        }
        out
    }

    /// `I⊗⋯⊗ε⊗⋯⊗I` on `slot`.
    pub fn counit_slot(&self, slot: usize) -> Self {
        let mut out = Self::zero(self.arity - 1);
        for (k, v) in &self.terms {
            if k[slot].is_empty() {
                let mut words = k.clone();
                words.remove(slot);
                out.add_term(words, v.clone());
            }
        }
        out
    }

    /// Largest total word length over all terms.
    pub fn max_length(&self) -> usize {
        self.terms.keys().map(|k| k.iter().map(Vec::len).sum()).max().unwrap_or(0)
    }
}

/// PBW rewriting for one Lie algebra, memoized per word.
///
/// Rewrites the first descent `x_j x_i` (`j > i`) as
/// `x_i x_j + [x_j, x_i]` until every word is nondecreasing.
pub struct Pbw<'a> {
    lie: &'a LiePresentation,
    cache: RefCell<HashMap<Word, Rc<Combo>>>,
}

impl<'a> Pbw<'a> {
    pub fn new(lie: &'a LiePresentation) -> Self {
        Pbw { lie, cache: RefCell::new(HashMap::new()) }
    }

    pub fn lie(&self) -> &LiePresentation {
        self.lie
    }

    pub fn normalize_word(&self, w: &[usize]) -> Rc<Combo> {
        if let Some(hit) = self.cache.borrow().get(w) {
            return hit.clone();
        }
        let result = Rc::new(self.compute(w));
        self.cache.borrow_mut().insert(w.to_vec(), result.clone());
        result
    }

    fn compute(&self, w: &[usize]) -> Combo {
        let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i] > w[i + 1]) else {
            return vec![(w.to_vec(), Scalar::one())];
        };
        let mut acc: BTreeMap<Word, Scalar> = BTreeMap::new();
        let mut swapped = w.to_vec();
        swapped.swap(i, i + 1);
        for (word, c) in self.normalize_word(&swapped).iter() {
            *acc.entry(word.clone()).or_insert_with(Scalar::zero) += c;
        }
        for (k, c) in self.lie.bracket_terms(w[i], w[i + 1]) {
            let mut shorter = w[..i].to_vec();
            shorter.push(k);
            shorter.extend_from_slice(&w[i + 2..]);
            for (word, d) in self.normalize_word(&shorter).iter() {
                *acc.entry(word.clone()).or_insert_with(Scalar::zero) += &c * d;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    pub fn normalize(&self, t: &UTensor) -> UTensor {
        let mut out = UTensor::zero(t.arity);
        for (words, c) in &t.terms {
            self.expand_into(&mut out, words, c);
        }
        out
    }

    /// Normal form of a pure tensor of (unnormalized) words, added to `out`.
    fn expand_into(&self, out: &mut UTensor, words: &[Word], c: &Scalar) {
        let combos: Vec<Rc<Combo>> = words.iter().map(|w| self.normalize_word(w)).collect();
        let mut partial: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
        for combo in &combos {
            let mut next = Vec::with_capacity(partial.len() * combo.len());
            for (ws, x) in &partial {
                for (w, y) in combo.iter() {
                    let mut ws2 = ws.clone();
                    ws2.push(w.clone());
                    next.push((ws2, x * y));
                }
            }
            partial = next;
        }
        for (ws, x) in partial {
            out.add_term(ws, x);
        }
    }

    /// Slotwise product, normalized.
    pub fn mul(&self, a: &UTensor, b: &UTensor) -> UTensor {
        assert_eq!(a.arity, b.arity, "arity mismatch");
        let mut out = UTensor::zero(a.arity);
        for (wa, x) in &a.terms {
            for (wb, y) in &b.terms {
                let words: Vec<Word> = wa
                    .iter()
                    .zip(wb)
                    .map(|(p, q)| {
                        let mut w = p.clone();
                        w.extend_from_slice(q);
                        w
                    })
                    .collect();
                self.expand_into(&mut out, &words, &(x * y));
            }
        }
        out
    }

    /// `[a, b] = ab − ba`.
    pub fn commutator(&self, a: &UTensor, b: &UTensor) -> UTensor {
        self.mul(a, b).sub(&self.mul(b, a))
    }

    /// `Δ` applied to `slot`, which becomes two adjacent slots. Primitive on
    /// `g`; on a normal-form word this is the sum over sub-words.
    pub fn coproduct_slot(&self, t: &UTensor, slot: usize) -> UTensor {
        let t = self.normalize(t);
        let mut out = UTensor::zero(t.arity + 1);
        for (words, c) in &t.terms {
            let w = &words[slot];
            let len = w.len();
            assert!(len < 32, "word too long for subset expansion");
            for mask in 0u32..(1u32 << len) {
                let (mut left, mut right) = (Vec::new(), Vec::new());
                for (pos, &letter) in w.iter().enumerate() {
                    if mask & (1 << pos) != 0 {
                        left.push(letter);
                    } else {
                        right.push(letter);
                    }
                }
                let mut ws = words[..slot].to_vec();
                ws.push(left);
                ws.push(right);
                ws.extend_from_slice(&words[slot + 1..]);
                out.add_term(ws, c.clone());
            }
        }
        out
    }

    /// `S(x_{i₁}⋯x_{i_k}) = (−1)^k x_{i_k}⋯x_{i₁}` on `slot`.
    pub fn antipode_slot(&self, t: &UTensor, slot: usize) -> UTensor {
        let mut raw = UTensor::zero(t.arity);
        for (words, c) in &t.terms {
            let mut ws = words.clone();
            ws[slot].reverse();
            let c = if words[slot].len() % 2 == 0 { c.clone() } else { -c.clone() };
            raw.add_term(ws, c);
        }
        self.normalize(&raw)
    }

    /// Multiply all slots together into one: `m^{(k)}`.
    pub fn multiply_slots(&self, t: &UTensor) -> UTensor {
        let mut out = UTensor::zero(1);
        for (words, c) in &t.terms {
            let w: Word = words.iter().flatten().copied().collect();
            self.expand_into(&mut out, &[w], c);
        }
        out
    }
}

/// Word display with basis names, `1` for the empty word.
pub fn format_word(w: &[usize], names: &[String]) -> String {
    if w.is_empty() {
        "1".into()
    } else {
        w.iter().map(|&i| names[i].as_str()).collect::<Vec<_>>().join("")
    }
}
