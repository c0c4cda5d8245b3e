//! Text forms of polynomials and product expressions.
//!
//! Polynomials: `term (('+' | '-') term)*` with `term := coeff? 'T' ('^' n)? | coeff`.
//! A `-` negates the following coefficient in the hyperfield. Coefficients
//! may be parenthesised, e.g. `0T^3+(-2)`.
//!
//! Expressions: `*` is the hyperproduct and `+` the hypersum of polynomials.
//! A parenthesis opens a group only when its content mentions `T` or `*`;
//! otherwise it belongs to a coefficient literal. An expression-level `+`
//! must be followed by a group.

use crate::carriers::{Element, Hyperfield};
use crate::error::{Error, Result};

use super::expr::ProductExpr;
use super::poly::Polynomial;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn strip_parens(s: &str) -> &str {
    let t = s.trim();
    if t.starts_with('(') && t.ends_with(')') && matching_close(t, 0) == Some(t.len() - 1) {
        strip_parens(&t[1..t.len() - 1])
    } else {
        t
    }
}

/// Byte index of the bracket closing the one opened at `open`.
fn matching_close(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0i32;
    for (i, c) in s[open..].char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}

/// Splits at top-level `+`/`-` into signed pieces.
fn signed_terms(text: &str) -> Result<Vec<(bool, String)>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut negative = false;
    for c in text.chars() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            '+' | '-' if depth == 0 => {
                if cur.trim().is_empty() {
                    // consecutive signs compose, so `+-x` reads as `-x`
                    negative ^= c == '-';
                } else {
                    out.push((negative, std::mem::take(&mut cur)));
                    negative = c == '-';
                }
                continue;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(parse_err(format!("unbalanced brackets in `{text}`")));
        }
        if !c.is_whitespace() || depth > 0 {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(parse_err(format!("unbalanced brackets in `{text}`")));
    }
    if cur.trim().is_empty() {
        return Err(parse_err(format!("missing term in `{text}`")));
    }
    out.push((negative, cur));
    Ok(out)
}

/// Splits a term into coefficient text (possibly empty) and exponent.
fn split_term(term: &str) -> Result<(String, Option<usize>)> {
    let mut depth = 0i32;
    let mut t_pos = None;
    for (i, c) in term.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => depth -= 1,
            'T' if depth == 0 => t_pos = Some(i),
            _ => {}
        }
    }
    let Some(pos) = t_pos else {
        return Ok((term.to_string(), None));
    };
    let rest = &term[pos + 1..];
    let exp = if rest.is_empty() {
        1
    } else {
        rest.strip_prefix('^')
            .and_then(|e| e.trim().parse::<usize>().ok())
            .ok_or_else(|| parse_err(format!("bad exponent in `{term}`")))?
    };
    let coeff = term[..pos].trim_end_matches('*').to_string();
    Ok((coeff, Some(exp)))
}

pub fn parse_poly(text: &str, hf: &Hyperfield) -> Result<Polynomial> {
    let text = text.trim();
    if text.is_empty() {
        return Err(parse_err("empty polynomial"));
    }
    let mut pieces = signed_terms(text)?;
    // `-inf` is a literal, not a negated `inf`
    for (neg, body) in pieces.iter_mut() {
        if *neg && body.starts_with("inf") {
            *neg = false;
            body.insert(0, '-');
        }
    }
    let mut coeffs: Vec<Option<Element>> = Vec::new();
    for (negative, body) in pieces {
        let (coeff_text, power) = split_term(&body)?;
        let exp = power.unwrap_or(0);
        let lit = strip_parens(&coeff_text);
        let mut c = if lit.is_empty() {
            if power.is_none() {
                return Err(parse_err(format!("missing coefficient in `{text}`")));
            }
            hf.one()
        } else {
            hf.parse_element(lit)?
        };
        if negative {
            c = hf.neg(&c)?;
        }
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, None);
        }
        if coeffs[exp].is_some() {
            return Err(parse_err(format!("repeated power T^{exp} in `{text}`")));
        }
        coeffs[exp] = Some(c);
    }
    let coeffs: Vec<Element> = coeffs.into_iter().map(|c| c.unwrap_or_else(|| hf.zero())).collect();
    if coeffs.last().is_some_and(|c| hf.is_zero(c)) {
        return Err(Error::ZeroLeading);
    }
    Polynomial::new(hf, coeffs)
}

/// Canonical text; `parse_poly(format_poly(p)) == p`.
pub fn format_poly(p: &Polynomial) -> String {
    let hf = p.hf();
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate().rev() {
        if hf.is_zero(c) {
            continue;
        }
        let text = hf.format_element(c);
        let neg = hf.neg(c).expect("own element");
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) if hf.format_element(&neg) == rest => (true, neg),
            _ => (false, c.clone()),
        };
        let body_text = hf.format_element(&body);
        let coeff = if i > 0 && body == hf.one() && body_text == "1" {
            String::new()
        } else if body_text.starts_with('-') {
            format!("({body_text})")
        } else {
            body_text
        };
        let mono = match i {
            0 => String::new(),
            1 => "T".into(),
            _ => format!("T^{i}"),
        };
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&coeff);
        out.push_str(&mono);
    }
    out
}

struct ExprParser<'a> {
    src: &'a str,
    pos: usize,
    hf: &'a Hyperfield,
}

impl<'a> ExprParser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    /// Whether a `(` at `at` opens an expression group.
    fn group_at(&self, at: usize) -> Result<Option<usize>> {
        if !self.src[at..].starts_with('(') {
            return Ok(None);
        }
        let close = matching_close(self.src, at).ok_or_else(|| parse_err("unbalanced parenthesis"))?;
        let inner = &self.src[at + 1..close];
        Ok((inner.contains('T') || inner.contains('*')).then_some(close))
    }

    fn sum(&mut self) -> Result<ProductExpr> {
        let mut left = self.product()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('+') {
                return Ok(left);
            }
            self.pos += 1;
            self.skip_ws();
            let right = self.product()?;
            left = ProductExpr::Sum(Box::new(left), Box::new(right));
        }
    }

    fn product(&mut self) -> Result<ProductExpr> {
        let mut left = self.unary()?;
        loop {
            self.skip_ws();
            if self.peek() != Some('*') {
                return Ok(left);
            }
            self.pos += 1;
            let right = self.unary()?;
            left = match left {
                ProductExpr::Leaf(p) if p.degree() == 0 => ProductExpr::Scalar(p.leading().clone(), Box::new(right)),
                l => ProductExpr::Prod(Box::new(l), Box::new(right)),
            };
        }
    }

    fn unary(&mut self) -> Result<ProductExpr> {
        self.skip_ws();
        if let Some(close) = self.group_at(self.pos)? {
            let inner = &self.src[self.pos + 1..close];
            let e = parse_expr(inner, self.hf)?;
            self.pos = close + 1;
            return Ok(e);
        }
        self.literal()
    }

    /// A polynomial literal, up to a top-level `*`, a closing bracket, the
    /// end, or a `+` that precedes a group.
    fn literal(&mut self) -> Result<ProductExpr> {
        let start = self.pos;
        let mut i = self.pos;
        while i < self.src.len() {
            let c = self.src[i..].chars().next().unwrap();
            match c {
                '*' | ')' => break,
                '(' | '{' => {
                    i = matching_close(self.src, i).ok_or_else(|| parse_err("unbalanced bracket"))? + 1;
                    continue;
                }
                '+' => {
                    let mut j = i + 1;
                    while self.src[j..].starts_with(char::is_whitespace) {
                        j += 1;
                    }
                    if self.group_at(j)?.is_some() {
                        break;
                    }
                }
                _ => {}
            }
            i += c.len_utf8();
        }
        self.pos = i;
        let text = &self.src[start..i];
        Ok(ProductExpr::Leaf(parse_poly(text, self.hf)?))
    }
}

pub fn parse_expr(text: &str, hf: &Hyperfield) -> Result<ProductExpr> {
    let mut p = ExprParser { src: text, pos: 0, hf };
    let e = p.sum()?;
    p.skip_ws();
    if p.pos != text.len() {
        return Err(parse_err(format!("unexpected `{}` in expression", &text[p.pos..])));
    }
    Ok(e)
}
