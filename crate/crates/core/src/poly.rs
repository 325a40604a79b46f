//! Commutative polynomials, noncommutative tensor words, their text form and
//! the canonical bases of graded pieces.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write as _;

use crate::error::{Error, Result};
use crate::field::{Elem, PrimeField};

/// Exponent vector of a commutative monomial.
///
/// Ordered graded-lexicographically: higher degree is greater, ties broken
/// lexicographically with the first variable largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Variable indices with multiplicity, ascending.
    pub fn letters(&self) -> Vec<usize> {
        let mut w = Vec::with_capacity(self.degree() as usize);
        for (i, &e) in self.0.iter().enumerate() {
            w.extend(core::iter::repeat_n(i, e as usize));
        }
        w
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A word in the free monoid on `n` letters.
pub type Word = Vec<usize>;

/// Whether a graded piece is taken in the polynomial ring or the tensor algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieceKind {
    Commutative,
    Free,
}

/// Monomials of degree `d` in `n` variables, largest (grlex) first.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(Monomial(Vec::new()));
        }
        return out;
    }
    let mut cur = vec![0u32; n];
    fill_monomials(&mut cur, 0, d, &mut out);
    out
}

fn fill_monomials(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    if i + 1 == cur.len() {
        cur[i] = left;
        out.push(Monomial(cur.clone()));
        return;
    }
    for e in (0..=left).rev() {
        cur[i] = e;
        fill_monomials(cur, i + 1, left - e, out);
    }
    cur[i] = 0;
}

/// Words of length `d` over `n` letters in lexicographic order.
pub fn words_of_degree(n: usize, d: usize) -> Vec<Word> {
    let mut out: Vec<Word> = vec![Vec::new()];
    for _ in 0..d {
        let mut next = Vec::with_capacity(out.len() * n);
        for w in &out {
            for l in 0..n {
                let mut v = w.clone();
                v.push(l);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Canonical ordered basis of a graded piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PieceBasis {
    Commutative(Vec<Monomial>),
    Free(Vec<Word>),
}

impl PieceBasis {
    pub fn len(&self) -> usize {
        match self {
            PieceBasis::Commutative(v) => v.len(),
            PieceBasis::Free(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

pub fn graded_piece_basis(kind: PieceKind, n_vars: usize, degree: usize) -> PieceBasis {
    match kind {
        PieceKind::Commutative => {
            PieceBasis::Commutative(monomials_of_degree(n_vars, degree as u32))
        }
        PieceKind::Free => PieceBasis::Free(words_of_degree(n_vars, degree)),
    }
}

/// Positions of all monomials of degree `0..=max_degree`, ordered by
/// ascending degree and, within a degree, descending grlex.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    nvars: usize,
    monomials: Vec<Monomial>,
    degree_start: Vec<usize>,
    position: BTreeMap<Vec<u32>, usize>,
}

impl MonomialIndex {
    pub fn new(nvars: usize, max_degree: usize) -> Self {
        let mut monomials = Vec::new();
        let mut degree_start = Vec::with_capacity(max_degree + 2);
        for d in 0..=max_degree {
            degree_start.push(monomials.len());
            monomials.extend(monomials_of_degree(nvars, d as u32));
        }
        degree_start.push(monomials.len());
        let position = monomials
            .iter()
            .enumerate()
            .map(|(i, m)| (m.0.clone(), i))
            .collect();
        Self {
            nvars,
            monomials,
            degree_start,
            position,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn max_degree(&self) -> usize {
        self.degree_start.len() - 2
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.monomials[i]
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.position.get(&m.0).copied()
    }

    /// Index range of the monomials of degree `d`.
    pub fn degree_range(&self, d: usize) -> core::ops::Range<usize> {
        self.degree_start[d]..self.degree_start[d + 1]
    }
}

/// Commutative polynomial with exact coefficients; zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    nvars: usize,
    terms: BTreeMap<Monomial, Elem>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, nvars: usize) -> Self {
        Self {
            field,
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(field: PrimeField, m: Monomial, c: Elem) -> Self {
        let mut p = Self::zero(field, m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending grlex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, Elem)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn coefficient(&self, m: &Monomial) -> Elem {
        self.terms.get(m).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, m: Monomial, c: Elem) {
        assert_eq!(m.nvars(), self.nvars, "monomial in wrong number of variables");
        if c == 0 {
            return;
        }
        let f = self.field;
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), self.field.neg(c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let f = self.field;
        let mut out = Polynomial::zero(f, self.nvars);
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                out.add_term(a.mul(b), f.mul(ca, cb));
            }
        }
        out
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        let mut out = Polynomial::zero(self.field, self.nvars);
        for (a, c) in self.terms() {
            out.terms.insert(a.mul(m), c);
        }
        out
    }

    /// Largest total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Smallest total degree of a term (the m-adic order).
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(|m| m.degree())
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            field: self.field,
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, &c)| (m.clone(), c))
                .collect(),
        }
    }

    /// Canonical text: terms in descending grlex, signed coefficients.
    pub fn to_text(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in self.terms().rev().enumerate() {
            let sc = self.field.to_signed(c);
            let (neg, mag) = if sc < 0 { (true, -sc) } else { (false, sc) };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || m.degree() == 0 {
                factors.push(mag.to_string());
            }
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[v].to_string()),
                    _ => {
                        let mut t = String::new();
                        let _ = write!(t, "{}^{}", names[v], e);
                        factors.push(t);
                    }
                }
            }
            s.push_str(&factors.join("*"));
        }
        s
    }
}

/// Element of the tensor algebra: a combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    field: PrimeField,
    n_gens: usize,
    terms: BTreeMap<Word, Elem>,
}

impl TensorElement {
    pub fn zero(field: PrimeField, n_gens: usize) -> Self {
        Self {
            field,
            n_gens,
            terms: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn n_gens(&self) -> usize {
        self.n_gens
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: Elem) {
        assert!(w.iter().all(|&l| l < self.n_gens), "letter out of range");
        if c == 0 {
            return;
        }
        let f = self.field;
        let s = f.add(self.terms.get(&w).copied().unwrap_or(0), c);
        if s == 0 {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, s);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, Elem)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// The common length of all words, when there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|w| w.len());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Coordinates in the lexicographic word basis of degree `d`.
    pub fn to_vector(&self, d: usize) -> Option<Vec<Elem>> {
        let mut v = vec![0; self.n_gens.pow(d as u32)];
        for (w, c) in self.terms() {
            if w.len() != d {
                return None;
            }
            let idx = w.iter().fold(0usize, |acc, &l| acc * self.n_gens + l);
            v[idx] = c;
        }
        Some(v)
    }

    pub fn from_vector(field: PrimeField, n_gens: usize, d: usize, v: &[Elem]) -> Self {
        let mut t = Self::zero(field, n_gens);
        for (w, &c) in words_of_degree(n_gens, d).into_iter().zip(v) {
            t.add_term(w, c);
        }
        t
    }

    pub fn to_text(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in self.terms().enumerate() {
            let sc = self.field.to_signed(c);
            let (neg, mag) = if sc < 0 { (true, -sc) } else { (false, sc) };
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != 1 || w.is_empty() {
                factors.push(mag.to_string());
            }
            factors.extend(w.iter().map(|&l| names[l].to_string()));
            s.push_str(&factors.join("*"));
        }
        s
    }
}

// ---------------------------------------------------------------------------
// parsing

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.text[self.pos..].chars().next() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn err<T>(&self, offset: usize, message: &str) -> Result<T> {
        Err(Error::Syntax {
            offset,
            message: message.to_string(),
        })
    }

    fn number(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let len = self.text[start..]
            .bytes()
            .take_while(|b| b.is_ascii_digit())
            .count();
        if len == 0 {
            return None;
        }
        self.pos += len;
        Some((start, &self.text[start..start + len]))
    }

    fn ident(&mut self) -> Option<(usize, &'a str)> {
        self.skip_ws();
        let start = self.pos;
        let bytes = self.text.as_bytes();
        if start >= bytes.len() || !(bytes[start].is_ascii_alphabetic() || bytes[start] == b'_') {
            return None;
        }
        let len = self.text[start..]
            .bytes()
            .take_while(|b| b.is_ascii_alphanumeric() || *b == b'_')
            .count();
        self.pos += len;
        Some((start, &self.text[start..start + len]))
    }
}

/// Signed term: coefficient and the ordered list of variable indices.
type RawTerm = (Elem, Vec<usize>);

fn reduce_decimal(field: &PrimeField, digits: &str) -> Elem {
    let p = field.characteristic() as u64;
    digits
        .bytes()
        .fold(0u64, |acc, b| (acc * 10 + (b - b'0') as u64) % p) as Elem
}

fn parse_terms(text: &str, vars: &[&str], field: &PrimeField) -> Result<Vec<RawTerm>> {
    let mut cur = Cursor { text, pos: 0 };
    let mut terms = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        match cur.peek() {
            None if first => return cur.err(cur.pos, "empty polynomial"),
            None => return cur.err(cur.pos, "expected a term after the sign"),
            Some('+') | Some('-') => {
                negative = cur.peek() == Some('-');
                cur.pos += 1;
            }
            Some(_) if first => {}
            Some(_) => return cur.err(cur.pos, "expected `+` or `-` between terms"),
        }
        first = false;
        let mut coeff: Elem = 1 % field.characteristic();
        let mut letters = Vec::new();
        loop {
            if let Some((_, digits)) = cur.number() {
                coeff = field.mul(coeff, reduce_decimal(field, digits));
            } else if let Some((off, name)) = cur.ident() {
                let Some(v) = vars.iter().position(|&n| n == name) else {
                    return Err(Error::UnknownVariable {
                        offset: off,
                        name: name.to_string(),
                    });
                };
                let mut exp = 1usize;
                if cur.peek() == Some('^') {
                    cur.pos += 1;
                    let Some((_, digits)) = cur.number() else {
                        return cur.err(cur.pos, "expected an exponent after `^`");
                    };
                    exp = digits
                        .parse::<usize>()
                        .ok()
                        .filter(|&e| e <= 1000)
                        .ok_or(Error::Syntax {
                            offset: cur.pos,
                            message: "exponent too large".to_string(),
                        })?;
                }
                letters.extend(core::iter::repeat_n(v, exp));
            } else {
                return match cur.peek() {
                    None => cur.err(cur.pos, "unexpected end of input, expected a factor"),
                    Some(_) => cur.err(cur.pos, "expected a coefficient or variable"),
                };
            }
            if cur.peek() == Some('*') {
                cur.pos += 1;
            } else {
                break;
            }
        }
        if negative {
            coeff = field.neg(coeff);
        }
        terms.push((coeff, letters));
        if cur.peek().is_none() {
            break;
        }
    }
    Ok(terms)
}

/// Parses signed sums of terms `c*x^a*y^b` with commutative collection.
pub fn parse_polynomial(text: &str, vars: &[&str], field: PrimeField) -> Result<Polynomial> {
    let mut p = Polynomial::zero(field, vars.len());
    for (c, letters) in parse_terms(text, vars, &field)? {
        let mut e = vec![0u32; vars.len()];
        for l in letters {
            e[l] += 1;
        }
        p.add_term(Monomial(e), c);
    }
    Ok(p)
}

/// Parses the same grammar into the tensor algebra, keeping letter order.
pub fn parse_tensor(text: &str, vars: &[&str], field: PrimeField) -> Result<TensorElement> {
    let mut t = TensorElement::zero(field, vars.len());
    for (c, letters) in parse_terms(text, vars, &field)? {
        t.add_term(letters, c);
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    #[test]
    fn parse_examples() {
        let vars = ["x", "y", "z"];
        let p = parse_polynomial("x^2 - y*z", &vars, f()).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![2, 0, 0])), 1);
        assert_eq!(p.coefficient(&Monomial(vec![0, 1, 1])), 100);
        assert_eq!(p.terms().count(), 2);
        assert!(parse_polynomial("0", &vars, f()).unwrap().is_zero());
        assert!(parse_polynomial("x*y - y*x", &vars, f()).unwrap().is_zero());
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let vars = ["x", "y"];
        assert_eq!(
            parse_polynomial("x + w", &vars, f()),
            Err(Error::UnknownVariable {
                offset: 4,
                name: "w".into()
            })
        );
        match parse_polynomial("x +* y", &vars, f()) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 3),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_polynomial("", &vars, f()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x y", &vars, f()), Err(Error::Syntax { .. })));
        assert!(matches!(parse_polynomial("x^", &vars, f()), Err(Error::Syntax { .. })));
    }

    #[test]
    fn coefficients_reduce_mod_p() {
        let p = parse_polynomial("203*x - 2*3*y", &["x", "y"], f()).unwrap();
        assert_eq!(p.coefficient(&Monomial(vec![1, 0])), 1);
        assert_eq!(p.coefficient(&Monomial(vec![0, 1])), 95);
    }

    #[test]
    fn printing_is_canonical() {
        let vars = ["x", "y", "z"];
        let p = parse_polynomial("- y*z + x^2 + 3 *z*z*x", &vars, f()).unwrap();
        assert_eq!(p.to_text(&vars), "3*x*z^2 + x^2 - y*z");
        assert_eq!(parse_polynomial(&p.to_text(&vars), &vars, f()).unwrap(), p);
    }

    #[test]
    fn tensor_parse_keeps_order() {
        let t = parse_tensor("x*y + y*x", &["x", "y"], f()).unwrap();
        assert_eq!(t.to_vector(2).unwrap(), vec![0, 1, 1, 0]);
        assert_eq!(t.to_text(&["x", "y"]), "x*y + y*x");
    }

    #[test]
    fn graded_piece_examples() {
        let PieceBasis::Commutative(m) = graded_piece_basis(PieceKind::Commutative, 2, 2) else {
            unreachable!()
        };
        assert_eq!(
            m,
            vec![Monomial(vec![2, 0]), Monomial(vec![1, 1]), Monomial(vec![0, 2])]
        );
        let PieceBasis::Free(w) = graded_piece_basis(PieceKind::Free, 2, 2) else {
            unreachable!()
        };
        assert_eq!(w, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(graded_piece_basis(PieceKind::Free, 3, 0).len(), 1);
    }

    #[test]
    fn monomial_index_layout() {
        let idx = MonomialIndex::new(2, 3);
        assert_eq!(idx.len(), 10);
        assert_eq!(idx.degree_range(2), 3..6);
        assert_eq!(idx.position(&Monomial(vec![1, 1])), Some(4));
        assert_eq!(idx.monomial(3), &Monomial(vec![2, 0]));
    }
}
