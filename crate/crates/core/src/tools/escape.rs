//! Escaping for JavaScript string literals, with offset translation between
//! the raw (escaped) body and the plain text it denotes.

use serde::{Deserialize, Serialize};

/// Delimiter of the literal the body belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quote {
    Double,
    Single,
    Backtick,
}

impl Quote {
    pub fn from_char(c: char) -> Option<Quote> {
        match c {
            '"' => Some(Quote::Double),
            '\'' => Some(Quote::Single),
            '`' => Some(Quote::Backtick),
            _ => None,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Quote::Double => '"',
            Quote::Single => '\'',
            Quote::Backtick => '`',
        }
    }
}

/// Plain text of a literal body plus the offset correspondence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Unescaped {
    pub text: String,
    /// `raw_at[i]` is the raw offset where plain byte `i` starts; one extra
    /// entry for the end.
    raw_at: Vec<usize>,
}

impl Unescaped {
    /// Raw offset of plain offset `plain` (clamped).
    pub fn to_raw(&self, plain: usize) -> usize {
        self.raw_at[plain.min(self.raw_at.len() - 1)]
    }

    /// Plain offset of raw offset `raw`; offsets inside an escape sequence
    /// snap to the character it denotes.
    pub fn to_plain(&self, raw: usize) -> usize {
        match self.raw_at.binary_search(&raw) {
            Ok(mut i) => {
                // zero-width plain entries (line continuations) share offsets
                while i > 0 && self.raw_at[i - 1] == raw {
                    i -= 1;
                }
                i
            }
            Err(i) => i.saturating_sub(1),
        }
    }
}

/// Escape `plain` for the body of a literal delimited by `quote`.
pub fn escape(plain: &str, quote: Quote) -> String {
    let mut out = String::with_capacity(plain.len());
    let mut chars = plain.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\\' => out.push_str("\\\\"),
            '\n' if quote != Quote::Backtick => out.push_str("\\n"),
            '\r' if quote != Quote::Backtick => out.push_str("\\r"),
            '\t' if quote != Quote::Backtick => out.push_str("\\t"),
            '\u{2028}' if quote != Quote::Backtick => out.push_str("\\u2028"),
            '\u{2029}' if quote != Quote::Backtick => out.push_str("\\u2029"),
            '$' if quote == Quote::Backtick && chars.peek() == Some(&'{') => out.push_str("\\$"),
            c if c == quote.as_char() => {
                out.push('\\');
                out.push(c);
            }
            c => out.push(c),
        }
    }
    out
}

fn hex_value(s: &str) -> Option<char> {
    u32::from_str_radix(s, 16).ok().and_then(char::from_u32)
}

/// Decode the body of a literal. Unknown escapes denote the escaped
/// character itself, as in JavaScript.
pub fn unescape(raw: &str) -> Unescaped {
    let mut text = String::with_capacity(raw.len());
    let mut raw_at = Vec::with_capacity(raw.len() + 1);
    let bytes = raw.as_bytes();
    let mut i = 0;
    let push = |text: &mut String, raw_at: &mut Vec<usize>, c: char, at: usize| {
        for _ in 0..c.len_utf8() {
            raw_at.push(at);
        }
        text.push(c);
    };
    while i < raw.len() {
        let c = raw[i..].chars().next().expect("char boundary");
        if c != '\\' || i + 1 >= raw.len() {
            push(&mut text, &mut raw_at, c, i);
            i += c.len_utf8();
            continue;
        }
        let start = i;
        let next = raw[i + 1..].chars().next().expect("char boundary");
        let mut len = 1 + next.len_utf8();
        let decoded = match next {
            'n' => Some('\n'),
            't' => Some('\t'),
            'r' => Some('\r'),
            'b' => Some('\u{8}'),
            'f' => Some('\u{c}'),
            'v' => Some('\u{b}'),
            '0' if !bytes.get(i + 2).is_some_and(u8::is_ascii_digit) => Some('\0'),
            'x' => match raw.get(i + 2..i + 4).and_then(hex_value) {
                Some(ch) => {
                    len = 4;
                    Some(ch)
                }
                None => Some('x'),
            },
            'u' => {
                if raw[i + 2..].starts_with('{') {
                    match raw[i + 3..].find('}') {
                        Some(close) => match hex_value(&raw[i + 3..i + 3 + close]) {
                            Some(ch) => {
                                len = 4 + close;
                                Some(ch)
                            }
                            None => Some('u'),
                        },
                        None => Some('u'),
                    }
                } else {
                    match raw.get(i + 2..i + 6).and_then(hex_value) {
                        Some(ch) => {
                            len = 6;
                            Some(ch)
                        }
                        None => Some('u'),
                    }
                }
            }
            // line continuation: no character at all
            '\n' => None,
            '\r' => {
                if bytes.get(i + 2) == Some(&b'\n') {
                    len = 3;
                }
                None
            }
            other => Some(other),
        };
        if let Some(ch) = decoded {
            push(&mut text, &mut raw_at, ch, start);
        }
        i += len;
    }
    raw_at.push(raw.len());
    Unescaped { text, raw_at }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// String literal bodies as they appear in source, escapes kept in their
    /// canonical spelling.
    const FIXTURES: &[(&str, Quote)] = &[
        ("SELECT * FROM \\`events\\` WHERE id = 123", Quote::Backtick),
        ("plain text", Quote::Double),
        ("line one\\nline two", Quote::Double),
        ("say \\\"hi\\\"", Quote::Double),
        ("it\\'s", Quote::Single),
        ("back\\\\slash", Quote::Single),
        ("cost: \\${price}", Quote::Backtick),
        ("multi\nline \\`quoted\\`", Quote::Backtick),
        ("", Quote::Double),
        ("ünïcödé ✓", Quote::Double),
    ];

    #[test]
    fn fixture_literals_roundtrip() {
        for &(raw, quote) in FIXTURES {
            let plain = unescape(raw);
            assert_eq!(escape(&plain.text, quote), raw, "{raw:?}");
        }
    }

    #[test]
    fn backticks_inside_backtick_sql() {
        let u = unescape("SELECT * FROM \\`events\\` WHERE id = 123");
        assert_eq!(u.text, "SELECT * FROM `events` WHERE id = 123");
        // plain 14 is the opening backtick, raw 14 its backslash
        assert_eq!(u.to_raw(14), 14);
        assert_eq!(u.to_raw(15), 16);
        assert_eq!(u.to_plain(16), 15);
        assert_eq!(u.to_plain(15), 14);
        assert_eq!(u.to_raw(u.text.len()), 39);
    }

    #[test]
    fn numeric_escapes_decode() {
        assert_eq!(unescape("\\x41\\u0042\\u{43}\\0").text, "ABC\0");
        assert_eq!(unescape("a\\\nb").text, "ab");
        assert_eq!(unescape("\\q").text, "q");
        assert_eq!(unescape("trailing\\").text, "trailing\\");
    }

    #[test]
    fn index_map_is_monotone_and_total() {
        for &(raw, _) in FIXTURES {
            let u = unescape(raw);
            for p in 0..=u.text.len() {
                assert!(u.to_raw(p) <= raw.len());
                if p > 0 {
                    assert!(u.to_raw(p) >= u.to_raw(p - 1));
                }
                if u.text.is_char_boundary(p) {
                    assert_eq!(u.to_plain(u.to_raw(p)), p, "{raw:?} at {p}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn unescape_inverts_escape(plain in "[ -~\n\t\\\\`'\"$ü]{0,40}") {
            for quote in [Quote::Double, Quote::Single, Quote::Backtick] {
                let raw = escape(&plain, quote);
                prop_assert_eq!(&unescape(&raw).text, &plain);
            }
        }
    }
}
