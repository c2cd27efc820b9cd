//! Monoid element expressions such as `12I + 2P(v4)`.
//!
//! ```text
//! expr := term ('+' term)*
//! term := INT '*'? atom | atom
//! atom := 'I' | 'P(' id ')'
//! ```
//!
//! Whitespace is ignored everywhere and `I` is the free generator.

use std::fmt;

use qquiver::{MonoidElement, MonoidPresentation};

/// `col` is a 1-based character position in the expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "column {}: {}", self.col, self.message)
    }
}

impl std::error::Error for ExprError {}

struct Cursor {
    chars: Vec<(usize, char)>,
    pos: usize,
}

impl Cursor {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn col(&self) -> usize {
        self.chars.get(self.pos).map_or(self.chars.len() + 1, |&(k, _)| k + 1)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError {
            col: self.col(),
            message: message.into(),
        })
    }

    fn expect(&mut self, want: char) -> Result<(), ExprError> {
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => self.error(format!("expected `{want}`, found `{c}`")),
            None => self.error(format!("expected `{want}`, found end of input")),
        }
    }

    fn digits(&mut self) -> Result<u64, ExprError> {
        let start = self.pos;
        let mut n: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|&(_, c)| c.to_digit(10)) {
            n = match n.checked_mul(10).and_then(|n| n.checked_add(u64::from(d))) {
                Some(n) => n,
                None => {
                    self.pos = start;
                    return self.error("coefficient overflows u64");
                }
            };
            self.pos += 1;
        }
        Ok(n)
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let mut out = String::new();
        while let Some(&(_, c)) = self.chars.get(self.pos) {
            if c.is_ascii_alphanumeric() || c == '_' {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        out
    }
}

pub fn parse_element(p: &MonoidPresentation, text: &str) -> Result<MonoidElement, ExprError> {
    let mut cur = Cursor {
        chars: text.chars().enumerate().collect(),
        pos: 0,
    };
    let mut coords = vec![0u64; p.len()];
    loop {
        let coeff = match cur.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = cur.digits()?;
                if cur.peek() == Some('*') {
                    cur.pos += 1;
                }
                n
            }
            _ => 1,
        };
        let at = cur.col();
        let generator = match cur.peek() {
            Some('I') => {
                cur.pos += 1;
                "FREE".to_string()
            }
            Some('P') => {
                cur.pos += 1;
                cur.expect('(')?;
                let id_col = {
                    cur.skip_ws();
                    cur.col()
                };
                let id = cur.ident();
                if id.is_empty() {
                    return cur.error("expected a vertex id");
                }
                cur.expect(')')?;
                let name = format!("P:{id}");
                if p.generator_index(&name).is_none() {
                    return Err(ExprError {
                        col: id_col,
                        message: format!("unknown vertex `{id}`"),
                    });
                }
                name
            }
            Some(c) => return cur.error(format!("expected `I` or `P(id)`, found `{c}`")),
            None => return cur.error("expected `I` or `P(id)`, found end of input"),
        };
        let k = p.generator_index(&generator).ok_or(ExprError {
            col: at,
            message: format!("no generator `{generator}`"),
        })?;
        coords[k] = coords[k].checked_add(coeff).ok_or(ExprError {
            col: at,
            message: "coefficient overflows u64".into(),
        })?;
        match cur.peek() {
            None => break,
            Some('+') => cur.pos += 1,
            Some(c) => return cur.error(format!("expected `+` or end of input, found `{c}`")),
        }
    }
    Ok(MonoidElement(coords))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qquiver::vmonoid::{MonoidRelation, MonoidTag};

    fn pres() -> MonoidPresentation {
        let gens = vec!["FREE".to_string(), "P:v1".to_string(), "P:v4".to_string()];
        let rel = MonoidRelation {
            lhs: vec![0, 1, 1],
            rhs: vec![1, 0, 0],
            tag: MonoidTag::Custom,
        };
        MonoidPresentation::new(gens, vec![rel]).unwrap()
    }

    #[test]
    fn forms_of_terms() {
        let p = pres();
        assert_eq!(parse_element(&p, "12I + 2P(v4)").unwrap().0, vec![12, 0, 2]);
        assert_eq!(parse_element(&p, " 3 * P( v1 )+I+I").unwrap().0, vec![2, 3, 0]);
        assert_eq!(parse_element(&p, "0I").unwrap().0, vec![0, 0, 0]);
    }

    #[test]
    fn errors_carry_columns() {
        let p = pres();
        assert_eq!(parse_element(&p, "2I + P(v9)").unwrap_err().col, 8);
        assert_eq!(parse_element(&p, "2I +").unwrap_err().col, 5);
        assert_eq!(parse_element(&p, "2J").unwrap_err().col, 2);
        assert_eq!(parse_element(&p, "I I").unwrap_err().col, 3);
        assert!(parse_element(&p, "99999999999999999999I").is_err());
    }
}
