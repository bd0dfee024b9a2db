//! Poset expressions: `C<k>`, `A<k>`, `D[λ1,λ2,...]`, `+` (disjoint union)
//! and `>` (ordinal sum, binding looser than `+`), with parentheses.

use crate::classify::BlockSequence;
use crate::error::{Error, Result};
use crate::poset::{Partition, Poset};

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Chain(usize),
    Antichain(usize),
    Union(Vec<usize>),
    Plus,
    Above,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<(usize, Token)>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut pos = 0;
    let err = |offset: usize, message: &str| Error::Parse {
        offset,
        message: message.to_string(),
    };
    let number = |pos: &mut usize| -> Result<usize> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        src[start..*pos]
            .parse()
            .map_err(|_| err(start, "expected a number"))
    };
    while pos < bytes.len() {
        let c = bytes[pos];
        let at = pos;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                pos += 1;
                continue;
            }
            b'+' => {
                pos += 1;
                out.push((at, Token::Plus));
            }
            b'>' => {
                pos += 1;
                out.push((at, Token::Above));
            }
            b'(' => {
                pos += 1;
                out.push((at, Token::Open));
            }
            b')' => {
                pos += 1;
                out.push((at, Token::Close));
            }
            b'C' | b'A' => {
                pos += 1;
                let k = number(&mut pos)?;
                out.push((
                    at,
                    if c == b'C' {
                        Token::Chain(k)
                    } else {
                        Token::Antichain(k)
                    },
                ));
            }
            b'D' => {
                pos += 1;
                if bytes.get(pos) != Some(&b'[') {
                    return Err(err(pos, "expected '[' after 'D'"));
                }
                pos += 1;
                let mut parts = Vec::new();
                loop {
                    while bytes.get(pos) == Some(&b' ') {
                        pos += 1;
                    }
                    parts.push(number(&mut pos)?);
                    while bytes.get(pos) == Some(&b' ') {
                        pos += 1;
                    }
                    match bytes.get(pos) {
                        Some(b',') => pos += 1,
                        Some(b']') => {
                            pos += 1;
                            break;
                        }
                        _ => return Err(err(pos, "expected ',' or ']'")),
                    }
                }
                out.push((at, Token::Union(parts)));
            }
            _ => return Err(err(at, &format!("unexpected character {:?}", c as char))),
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Chain(usize),
    Antichain(usize),
    ChainUnion(Partition),
    Disjoint(Vec<Expr>),
    Ordinal(Vec<Expr>),
}

impl Expr {
    pub fn parse(src: &str) -> Result<Expr> {
        let tokens = tokenize(src)?;
        let mut parser = Parser {
            tokens,
            pos: 0,
            len: src.len(),
        };
        let e = parser.ordinal()?;
        if parser.pos != parser.tokens.len() {
            return Err(Error::Parse {
                offset: parser.tokens[parser.pos].0,
                message: "unexpected trailing input".into(),
            });
        }
        Ok(e)
    }

    pub fn build(&self) -> Poset {
        match self {
            Expr::Chain(k) => Poset::chain(*k),
            Expr::Antichain(k) => Poset::antichain(*k),
            Expr::ChainUnion(lambda) => lambda.parts().iter().fold(Poset::empty(), |acc, &c| {
                acc.disjoint_union(&Poset::chain(c))
            }),
            Expr::Disjoint(items) => items
                .iter()
                .fold(Poset::empty(), |acc, e| acc.disjoint_union(&e.build())),
            Expr::Ordinal(items) => items
                .iter()
                .fold(Poset::empty(), |acc, e| acc.ordinal_sum(&e.build())),
        }
    }

    /// Reads the expression as an ordinal sum of chain unions, if it is one.
    pub fn as_block_sequence(&self) -> Option<BlockSequence> {
        let items: Vec<&Expr> = match self {
            Expr::Ordinal(items) => items.iter().collect(),
            other => vec![other],
        };
        let mut blocks = Vec::new();
        for item in items {
            match item {
                Expr::Ordinal(_) => blocks.extend(item.as_block_sequence()?.blocks().to_vec()),
                other => {
                    let b = other.chain_union_block()?;
                    if b.n() > 0 {
                        blocks.push(b);
                    }
                }
            }
        }
        BlockSequence::new(blocks).ok()
    }

    fn chain_union_block(&self) -> Option<Partition> {
        let mut parts = Vec::new();
        self.collect_chains(&mut parts)?;
        parts.retain(|&c| c > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).ok()
    }

    fn collect_chains(&self, parts: &mut Vec<usize>) -> Option<()> {
        match self {
            Expr::Chain(k) => parts.push(*k),
            Expr::Antichain(k) => parts.extend(std::iter::repeat_n(1, *k)),
            Expr::ChainUnion(l) => parts.extend_from_slice(l.parts()),
            Expr::Disjoint(items) => {
                for e in items {
                    e.collect_chains(parts)?;
                }
            }
            Expr::Ordinal(items) => {
                // an ordinal sum is a chain only when every summand is a chain
                let mut total = 0;
                for e in items {
                    match e {
                        Expr::Chain(k) => total += k,
                        Expr::Antichain(1) => total += 1,
                        Expr::Antichain(0) => {}
                        _ => return None,
                    }
                }
                parts.push(total);
            }
        }
        Some(())
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.len, |(o, _)| *o)
    }

    fn ordinal(&mut self) -> Result<Expr> {
        let mut items = vec![self.disjoint()?];
        while self.peek() == Some(&Token::Above) {
            self.pos += 1;
            items.push(self.disjoint()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Ordinal(items)
        })
    }

    fn disjoint(&mut self) -> Result<Expr> {
        let mut items = vec![self.atom()?];
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            items.push(self.atom()?);
        }
        Ok(if items.len() == 1 {
            items.pop().unwrap()
        } else {
            Expr::Disjoint(items)
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        let offset = self.offset();
        let token = self.peek().cloned().ok_or(Error::Parse {
            offset,
            message: "unexpected end of expression".into(),
        })?;
        self.pos += 1;
        match token {
            Token::Chain(k) => Ok(Expr::Chain(k)),
            Token::Antichain(k) => Ok(Expr::Antichain(k)),
            Token::Union(parts) => {
                let mut sorted = parts.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                let lambda = Partition::new(sorted).map_err(|_| Error::Parse {
                    offset,
                    message: format!("{parts:?} is not a list of positive parts"),
                })?;
                if !lambda.is_admissible() {
                    return Err(Error::InadmissiblePartition(lambda.parts().to_vec()));
                }
                Ok(Expr::ChainUnion(lambda))
            }
            Token::Open => {
                let e = self.ordinal()?;
                if self.peek() != Some(&Token::Close) {
                    return Err(Error::Parse {
                        offset: self.offset(),
                        message: "expected ')'".into(),
                    });
                }
                self.pos += 1;
                Ok(e)
            }
            _ => Err(Error::Parse {
                offset,
                message: "expected C<k>, A<k>, D[...] or '('".into(),
            }),
        }
    }
}

/// Parses the block list of the `classify` command: whitespace- or
/// `>`-separated `D[...]`, `C<k>` or `A<k>` items, bottom block first.
pub fn parse_block_list(src: &str) -> Result<BlockSequence> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "no blocks given".into(),
        });
    }
    let mut blocks = Vec::new();
    for (at, token) in tokens {
        let parts = match token {
            Token::Above => continue,
            Token::Union(parts) => parts,
            Token::Chain(k) => vec![k],
            Token::Antichain(k) => vec![1; k],
            _ => {
                return Err(Error::Parse {
                    offset: at,
                    message: "blocks must be D[...], C<k> or A<k>".into(),
                })
            }
        };
        let mut sorted = parts;
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(sorted).map_err(|e| Error::Parse {
            offset: at,
            message: e.to_string(),
        })?;
        blocks.push(lambda);
    }
    BlockSequence::new(blocks)
}
