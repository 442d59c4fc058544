//! Expansion of support expressions into monomial sets.
//!
//! The grammar covers plain polynomials in caret syntax and the "generic
//! form" shorthand used for families of hypersurfaces:
//!
//! ```text
//! sum     := product ('+' product)*
//! product := power ('*'? power)*
//! power   := atom ('^' INT)?
//! atom    := VAR | '1' | '(' sum ')' | qform
//! VAR     := 'x' '_'? INT
//! qform   := 'q' '_'? (INT | '{' INT (',' INT)* '}') '(' vars (('|' | '||') vars)* ')'
//! ```
//!
//! `q4(x1,x2,x3,x4)` stands for all degree-4 monomials in the listed
//! variables. `q{2,3}(x0,x1 | x2,x3,x4)` stands for all products of a
//! degree-2 monomial in `x0,x1` with a degree-3 monomial in `x2,x3,x4`.
//! Coefficients are generic, so a product of sums expands to the Minkowski
//! sum of exponent sets and a sum is the union of its summands.

use std::collections::BTreeSet;

use crate::error::CoreError;
use crate::monomial::ExponentVector;

type Exps = BTreeSet<Vec<u32>>;

/// Expands an expression in `n_vars` variables into its set of monomials,
/// sorted ascending. Degrees are not checked here.
pub fn expand(text: &str, n_vars: usize) -> Result<Vec<ExponentVector>, CoreError> {
    if n_vars == 0 {
        return Err(CoreError::ZeroParameter { what: "n_vars" });
    }
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        n: n_vars,
    };
    let set = p.sum()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(CoreError::parse(p.pos, "unexpected trailing input"));
    }
    set.into_iter().map(ExponentVector::new).collect()
}

/// All exponent vectors of total degree `d` supported on `vars`.
fn homogeneous(n: usize, vars: &[usize], d: u32) -> Exps {
    let mut out = Exps::new();
    let mut cur = vec![0u32; n];
    fn rec(vars: &[usize], k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Exps) {
        if k + 1 == vars.len() {
            cur[vars[k]] += left;
            out.insert(cur.clone());
            cur[vars[k]] -= left;
            return;
        }
        for e in 0..=left {
            cur[vars[k]] += e;
            rec(vars, k + 1, left - e, cur, out);
            cur[vars[k]] -= e;
        }
    }
    if vars.is_empty() {
        if d == 0 {
            out.insert(cur);
        }
        return out;
    }
    rec(vars, 0, d, &mut cur, &mut out);
    out
}

fn product(a: &Exps, b: &Exps) -> Exps {
    let mut out = Exps::new();
    for x in a {
        for y in b {
            out.insert(x.iter().zip(y).map(|(p, q)| p + q).collect());
        }
    }
    out
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), CoreError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(CoreError::parse(self.pos, format!("expected '{}'", c as char)))
        }
    }

    fn int(&mut self) -> Result<u32, CoreError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(CoreError::parse(start, "expected an integer"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse()
            .map_err(|_| CoreError::parse(start, "integer out of range"))
    }

    fn sum(&mut self) -> Result<Exps, CoreError> {
        let mut acc = self.product()?;
        while self.eat(b'+') {
            acc.extend(self.product()?);
        }
        Ok(acc)
    }

    fn starts_power(&mut self) -> bool {
        matches!(self.peek(), Some(b'x' | b'q' | b'(' | b'1'))
    }

    fn product(&mut self) -> Result<Exps, CoreError> {
        let mut acc = self.power()?;
        loop {
            // `*` is optional between factors.
            if self.eat(b'*') || self.starts_power() {
                let rhs = self.power()?;
                acc = product(&acc, &rhs);
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Exps, CoreError> {
        let base = self.atom()?;
        if self.eat(b'^') {
            let k = self.int()?;
            let mut acc = homogeneous(self.n, &[], 0);
            for _ in 0..k {
                acc = product(&acc, &base);
            }
            Ok(acc)
        } else {
            Ok(base)
        }
    }

    fn var(&mut self) -> Result<usize, CoreError> {
        self.expect(b'x')?;
        self.eat(b'_');
        let at = self.pos;
        let k = self.int()? as usize;
        if k >= self.n {
            return Err(CoreError::parse(
                at,
                format!("variable x{k} out of range for {} variables", self.n),
            ));
        }
        Ok(k)
    }

    fn atom(&mut self) -> Result<Exps, CoreError> {
        match self.peek() {
            Some(b'x') => {
                let k = self.var()?;
                let mut e = vec![0u32; self.n];
                e[k] = 1;
                Ok(Exps::from([e]))
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(homogeneous(self.n, &[], 0))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.sum()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(b'q') => self.qform(),
            _ => Err(CoreError::parse(self.pos, "expected a variable, 'q', '1' or '('")),
        }
    }

    fn qform(&mut self) -> Result<Exps, CoreError> {
        self.expect(b'q')?;
        self.eat(b'_');
        let degrees = if self.eat(b'{') {
            let mut ds = vec![self.int()?];
            while self.eat(b',') {
                ds.push(self.int()?);
            }
            self.expect(b'}')?;
            ds
        } else {
            vec![self.int()?]
        };
        self.expect(b'(')?;
        let mut groups = vec![vec![self.var()?]];
        loop {
            if self.eat(b',') {
                let v = self.var()?;
                groups.last_mut().expect("non-empty").push(v);
            } else if self.eat(b'|') {
                self.eat(b'|');
                groups.push(vec![self.var()?]);
            } else {
                break;
            }
        }
        self.expect(b')')?;
        if groups.len() != degrees.len() {
            return Err(CoreError::parse(
                self.pos,
                format!(
                    "q-form has {} degrees but {} variable groups",
                    degrees.len(),
                    groups.len()
                ),
            ));
        }
        let mut acc = homogeneous(self.n, &[], 0);
        for (vars, &d) in groups.iter().zip(&degrees) {
            acc = product(&acc, &homogeneous(self.n, vars, d));
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::support::SupportSet;

    #[test]
    fn plain_monomials() {
        let s = SupportSet::parse("x0^2*x3*x4^2", 5).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s.iter().next().unwrap().exponents(), &[2, 0, 0, 1, 2]);
        let s = SupportSet::parse("x4*x0^4 + x4*x1^4", 5).unwrap();
        assert_eq!(s.len(), 2);
        let s = SupportSet::parse("x_0 x_1 x_2 x_3 x_4", 5).unwrap();
        assert_eq!(s.iter().next().unwrap().exponents(), &[1, 1, 1, 1, 1]);
    }

    #[test]
    fn q_patterns() {
        assert_eq!(SupportSet::parse("q5(x0,x1,x2,x3,x4)", 5).unwrap().len(), 126);
        assert_eq!(SupportSet::parse("x4*q4(x0,x1,x2,x3,x4)", 5).unwrap().len(), 70);
        let a = SupportSet::parse("q{2,3}(x0,x1 | x2,x3,x4)", 5).unwrap();
        assert_eq!(a.len(), 30);
        let b = SupportSet::parse("q_{2,3}(x_0,x_1 || x_2,x_3,x_4)", 5).unwrap();
        assert_eq!(a, b);
        let d = SupportSet::parse("x0 q4(x1,x2,x3,x4)", 5).unwrap();
        assert_eq!(d.len(), 35);
    }

    #[test]
    fn products_of_sums_and_powers() {
        let s = SupportSet::parse("(x0+x1)^2", 2).unwrap();
        assert_eq!(s.len(), 3);
        let s = SupportSet::parse("x0^2 (x1 + x2) + 1 x0 x1 x2", 3).unwrap();
        assert_eq!(s.len(), 3);
    }

    #[test]
    fn errors_are_reported() {
        assert!(SupportSet::parse("x5", 5).is_err());
        assert!(SupportSet::parse("x0 +", 5).is_err());
        assert!(SupportSet::parse("q{2,3}(x0,x1)", 5).is_err());
        assert!(matches!(
            SupportSet::parse("x0^2 + x1", 2),
            Err(CoreError::DegreeMismatch { .. })
        ));
    }
}
