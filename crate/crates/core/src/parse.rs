//! Text and JSON input formats for ideals.
//!
//! ```text
//! list     := monomial (',' monomial)*
//! monomial := factor ('*' factor)*
//! factor   := 'x' INT ('^' INT)?
//! ```
//! Whitespace is allowed between tokens. The ambient dimension is the largest
//! variable index that occurs.

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(format!("expected '{}', found '{}'", c as char, x as char)),
            None => self.err(format!("expected '{}', found end of input", c as char)),
        }
    }

    fn integer(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let text = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        match text.parse::<u32>() {
            Ok(v) if v <= i32::MAX as u32 => Ok(v),
            _ => Err(Error::Parse {
                pos: start,
                msg: format!("integer {text} out of range"),
            }),
        }
    }

    /// Returns `(zero-based variable, exponent)`.
    fn factor(&mut self) -> Result<(usize, u32)> {
        self.expect(b'x')?;
        let at = self.pos;
        let var = self.integer()?;
        if var == 0 {
            return Err(Error::Parse {
                pos: at,
                msg: "variables are numbered from x1".into(),
            });
        }
        let exp = if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.integer()?;
            if e == 0 {
                return Err(Error::Parse {
                    pos: at,
                    msg: "zero exponent".into(),
                });
            }
            e
        } else {
            1
        };
        Ok((var as usize - 1, exp))
    }

    fn monomial(&mut self) -> Result<Vec<(usize, u32)>> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(b'*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(factors)
    }
}

/// Parses `"x1^3, x1^2*x2, ..."` into a minimalized ideal.
pub fn parse_ideal(text: &str) -> Result<MonomialIdeal> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    if cur.peek().is_none() {
        return cur.err("empty generator list");
    }
    let mut monomials = vec![cur.monomial()?];
    while cur.peek() == Some(b',') {
        cur.pos += 1;
        monomials.push(cur.monomial()?);
    }
    if let Some(c) = cur.peek() {
        return cur.err(format!("unexpected '{}'", c as char));
    }
    let n = monomials
        .iter()
        .flatten()
        .map(|&(v, _)| v + 1)
        .max()
        .expect("non-empty");
    let gens = monomials.into_iter().map(|factors| {
        let mut e = vec![0u32; n];
        for (v, k) in factors {
            e[v] += k;
        }
        ExponentVector::new(e)
    });
    MonomialIdeal::minimalize(gens)
}

/// Parses `{"n": 3, "gens": [[3,0,0], ...]}`.
pub fn parse_ideal_json(text: &str) -> Result<MonomialIdeal> {
    Ok(serde_json::from_str(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genex_text() {
        let m = parse_ideal("x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3").unwrap();
        assert_eq!(m.dim(), 3);
        let expect: Vec<ExponentVector> = vec![
            [0, 0, 3].into(),
            [0, 3, 1].into(),
            [0, 4, 0].into(),
            [1, 2, 2].into(),
            [2, 1, 0].into(),
            [3, 0, 0].into(),
        ];
        assert_eq!(m.generators(), expect.as_slice());
    }

    #[test]
    fn amsterdam_text() {
        let m = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x3^2").unwrap();
        assert_eq!(m.num_generators(), 5);
        assert!(!m.is_generic());
    }

    #[test]
    fn single_variable() {
        let m = parse_ideal("x1").unwrap();
        assert_eq!(m.dim(), 1);
        assert_eq!(m.generators(), &[ExponentVector::from([1])]);
    }

    #[test]
    fn repeated_factor_accumulates() {
        let m = parse_ideal("x1*x1^2, x2").unwrap();
        assert_eq!(m.generators()[1], ExponentVector::from([3, 0]));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_ideal(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("   "), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("x1^0"),
            Err(Error::Parse { pos: 3, .. })
        ));
        assert!(matches!(parse_ideal("x0"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_ideal("x1, y2"),
            Err(Error::Parse { pos: 4, .. })
        ));
        assert!(matches!(parse_ideal("x1,"), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("x1 x2"), Err(Error::Parse { .. })));
    }

    #[test]
    fn json_form() {
        let m = parse_ideal_json(r#"{"n": 2, "gens": [[2,0],[0,3],[3,0]]}"#).unwrap();
        assert_eq!(m.num_generators(), 2);
        assert!(parse_ideal_json(r#"{"n": 3, "gens": [[2,0]]}"#).is_err());
        let back: MonomialIdeal =
            serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
    }
}
