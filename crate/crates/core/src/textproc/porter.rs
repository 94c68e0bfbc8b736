//! Porter suffix-stripping stemmer.
//!
//! Implements the classic 1980 algorithm (steps 1a through 5b) as fixed by
//! the reference implementation that produced the widely used vocabulary /
//! output test pair. That reference differs from the original paper text in
//! two documented points which are included here: step 2 maps `bli -> ble`
//! (instead of `abli -> able`) and adds `logi -> log`.

/// Stem context: a byte buffer plus the current word end `k` and the
/// stem end `j` set by the most recent suffix match.
struct Stemmer {
    buf: Vec<u8>,
    k: usize,
    j: usize,
}

impl Stemmer {
    fn is_cons(&self, i: usize) -> bool {
        match self.buf[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => {
                if i == 0 {
                    true
                } else {
                    !self.is_cons(i - 1)
                }
            }
            _ => true,
        }
    }

    /// Number of vowel-to-consonant group transitions in `buf[..len]`,
    /// the `m` of the measure form `[C](VC)^m[V]`.
    fn measure(&self, len: usize) -> usize {
        let mut m = 0;
        let mut i = 0;
        while i < len && self.is_cons(i) {
            i += 1;
        }
        loop {
            while i < len && !self.is_cons(i) {
                i += 1;
            }
            if i >= len {
                return m;
            }
            m += 1;
            while i < len && self.is_cons(i) {
                i += 1;
            }
            if i >= len {
                return m;
            }
        }
    }

    fn has_vowel(&self, len: usize) -> bool {
        (0..len).any(|i| !self.is_cons(i))
    }

    /// Stem of length `len` ends with a double consonant.
    fn double_cons(&self, len: usize) -> bool {
        len >= 2 && self.buf[len - 1] == self.buf[len - 2] && self.is_cons(len - 1)
    }

    /// Stem of length `len` ends consonant-vowel-consonant where the final
    /// consonant is not w, x or y (the `*o` condition).
    fn cvc(&self, len: usize) -> bool {
        if len < 3 || !self.is_cons(len - 3) || self.is_cons(len - 2) || !self.is_cons(len - 1) {
            return false;
        }
        !matches!(self.buf[len - 1], b'w' | b'x' | b'y')
    }

    /// True if the current word ends with `s`; sets `j` to the stem length.
    fn ends(&mut self, s: &[u8]) -> bool {
        if s.len() > self.k {
            return false;
        }
        if &self.buf[self.k - s.len()..self.k] == s {
            self.j = self.k - s.len();
            true
        } else {
            false
        }
    }

    fn set_to(&mut self, s: &[u8]) {
        self.buf.truncate(self.j);
        self.buf.extend_from_slice(s);
        self.k = self.j + s.len();
    }

    /// Replace the matched suffix when the stem has positive measure.
    fn replace(&mut self, s: &[u8]) {
        if self.measure(self.j) > 0 {
            self.set_to(s);
        }
    }

    fn step1a(&mut self) {
        if self.buf[self.k - 1] == b's' {
            if self.ends(b"sses") {
                self.k -= 2;
            } else if self.ends(b"ies") {
                self.set_to(b"i");
            } else if self.k >= 2 && self.buf[self.k - 2] != b's' {
                self.k -= 1;
            }
        }
        self.buf.truncate(self.k);
    }

    fn step1b(&mut self) {
        let fired = if self.ends(b"eed") {
            if self.measure(self.j) > 0 {
                self.k -= 1;
                self.buf.truncate(self.k);
            }
            false
        } else if self.ends(b"ed") && self.has_vowel(self.j) {
            self.k = self.j;
            self.buf.truncate(self.k);
            true
        } else if self.ends(b"ing") && self.has_vowel(self.j) {
            self.k = self.j;
            self.buf.truncate(self.k);
            true
        } else {
            false
        };
        if fired {
            if self.ends(b"at") {
                self.set_to(b"ate");
            } else if self.ends(b"bl") {
                self.set_to(b"ble");
            } else if self.ends(b"iz") {
                self.set_to(b"ize");
            } else if self.double_cons(self.k) && !matches!(self.buf[self.k - 1], b'l' | b's' | b'z')
            {
                self.k -= 1;
                self.buf.truncate(self.k);
            } else if self.measure(self.k) == 1 && self.cvc(self.k) {
                self.buf.push(b'e');
                self.k += 1;
            }
        }
    }

    fn step1c(&mut self) {
        if self.ends(b"y") && self.has_vowel(self.j) {
            self.buf[self.k - 1] = b'i';
        }
    }

    /// Apply the first matching rule of a `(suffix, replacement)` table.
    /// Matching stops at the first suffix that matches the word even when
    /// the measure condition then fails, mirroring the reference behavior.
    fn rule_table(&mut self, rules: &[(&[u8], &[u8])]) {
        for (suffix, replacement) in rules {
            if self.ends(suffix) {
                self.replace(replacement);
                return;
            }
        }
    }

    fn step2(&mut self) {
        self.rule_table(&[
            (b"ational", b"ate"),
            (b"tional", b"tion"),
            (b"enci", b"ence"),
            (b"anci", b"ance"),
            (b"izer", b"ize"),
            (b"bli", b"ble"),
            (b"alli", b"al"),
            (b"entli", b"ent"),
            (b"eli", b"e"),
            (b"ousli", b"ous"),
            (b"ization", b"ize"),
            (b"ation", b"ate"),
            (b"ator", b"ate"),
            (b"alism", b"al"),
            (b"iveness", b"ive"),
            (b"fulness", b"ful"),
            (b"ousness", b"ous"),
            (b"aliti", b"al"),
            (b"iviti", b"ive"),
            (b"biliti", b"ble"),
            (b"logi", b"log"),
        ]);
    }

    fn step3(&mut self) {
        self.rule_table(&[
            (b"icate", b"ic"),
            (b"ative", b""),
            (b"alize", b"al"),
            (b"iciti", b"ic"),
            (b"ical", b"ic"),
            (b"ful", b""),
            (b"ness", b""),
        ]);
    }

    fn step4(&mut self) {
        const SUFFIXES: &[&[u8]] = &[
            b"ement", b"ance", b"ence", b"able", b"ible", b"ment", b"ant", b"ent", b"ion", b"ism",
            b"ate", b"iti", b"ous", b"ive", b"ize", b"al", b"er", b"ic", b"ou",
        ];
        for suffix in SUFFIXES {
            if self.ends(suffix) {
                let stem_ok = if *suffix == b"ion" {
                    self.j >= 1 && matches!(self.buf[self.j - 1], b's' | b't')
                } else {
                    true
                };
                if stem_ok && self.measure(self.j) > 1 {
                    self.k = self.j;
                    self.buf.truncate(self.k);
                }
                return;
            }
        }
    }

    fn step5a(&mut self) {
        if self.buf[self.k - 1] == b'e' {
            let m = self.measure(self.k);
            if m > 1 || (m == 1 && !self.cvc(self.k - 1)) {
                self.k -= 1;
                self.buf.truncate(self.k);
            }
        }
    }

    fn step5b(&mut self) {
        if self.buf[self.k - 1] == b'l' && self.double_cons(self.k) && self.measure(self.k) > 1 {
            self.k -= 1;
            self.buf.truncate(self.k);
        }
    }
}

/// Stem a lowercase ASCII token. Tokens shorter than three characters and
/// tokens containing anything but ASCII lowercase letters pass through
/// unchanged.
pub fn porter_stem(token: &str) -> String {
    if token.len() <= 2 || !token.bytes().all(|b| b.is_ascii_lowercase()) {
        return token.to_string();
    }
    let mut s = Stemmer {
        buf: token.as_bytes().to_vec(),
        k: token.len(),
        j: 0,
    };
    s.step1a();
    if s.k > 0 {
        s.step1b();
        s.step1c();
        s.step2();
        s.step3();
        s.step4();
        s.step5a();
        s.step5b();
    }
    s.buf.truncate(s.k);
    String::from_utf8(s.buf).expect("stemmer operates on ASCII")
}

#[cfg(test)]
mod tests {
    use super::porter_stem;

    #[test]
    fn plural_rules() {
        assert_eq!(porter_stem("caresses"), "caress");
        assert_eq!(porter_stem("ponies"), "poni");
        assert_eq!(porter_stem("ties"), "ti");
        assert_eq!(porter_stem("caress"), "caress");
        assert_eq!(porter_stem("cats"), "cat");
    }

    #[test]
    fn past_and_continuous_rules() {
        assert_eq!(porter_stem("feed"), "feed");
        assert_eq!(porter_stem("agreed"), "agre");
        assert_eq!(porter_stem("plastered"), "plaster");
        assert_eq!(porter_stem("bled"), "bled");
        assert_eq!(porter_stem("motoring"), "motor");
        assert_eq!(porter_stem("sing"), "sing");
        assert_eq!(porter_stem("conflated"), "conflat");
        assert_eq!(porter_stem("troubled"), "troubl");
        assert_eq!(porter_stem("sized"), "size");
        assert_eq!(porter_stem("hopping"), "hop");
        assert_eq!(porter_stem("tanned"), "tan");
        assert_eq!(porter_stem("falling"), "fall");
        assert_eq!(porter_stem("hissing"), "hiss");
        assert_eq!(porter_stem("fizzed"), "fizz");
        assert_eq!(porter_stem("failing"), "fail");
        assert_eq!(porter_stem("filing"), "file");
    }

    #[test]
    fn y_to_i() {
        assert_eq!(porter_stem("happy"), "happi");
        assert_eq!(porter_stem("sky"), "sky");
    }

    #[test]
    fn short_tokens_unchanged() {
        assert_eq!(porter_stem("a"), "a");
        assert_eq!(porter_stem("at"), "at");
        assert_eq!(porter_stem(""), "");
    }

    #[test]
    fn non_lowercase_ascii_passes_through() {
        assert_eq!(porter_stem("utf8"), "utf8");
        assert_eq!(porter_stem("ann_param"), "ann_param");
        assert_eq!(porter_stem("naïve"), "naïve");
    }

    #[test]
    fn longer_suffix_chains() {
        assert_eq!(porter_stem("relational"), "relat");
        assert_eq!(porter_stem("conditional"), "condit");
        assert_eq!(porter_stem("rational"), "ration");
        assert_eq!(porter_stem("triplicate"), "triplic");
        assert_eq!(porter_stem("formative"), "form");
        assert_eq!(porter_stem("formalize"), "formal");
        assert_eq!(porter_stem("electriciti"), "electr");
        assert_eq!(porter_stem("electrical"), "electr");
        assert_eq!(porter_stem("hopeful"), "hope");
        assert_eq!(porter_stem("goodness"), "good");
        assert_eq!(porter_stem("revival"), "reviv");
        assert_eq!(porter_stem("allowance"), "allow");
        assert_eq!(porter_stem("inference"), "infer");
        assert_eq!(porter_stem("airliner"), "airlin");
        assert_eq!(porter_stem("gyroscopic"), "gyroscop");
        assert_eq!(porter_stem("adjustable"), "adjust");
        assert_eq!(porter_stem("defensible"), "defens");
        assert_eq!(porter_stem("irritant"), "irrit");
        assert_eq!(porter_stem("replacement"), "replac");
        assert_eq!(porter_stem("adjustment"), "adjust");
        assert_eq!(porter_stem("dependent"), "depend");
        assert_eq!(porter_stem("adoption"), "adopt");
        assert_eq!(porter_stem("communism"), "commun");
        assert_eq!(porter_stem("activate"), "activ");
        assert_eq!(porter_stem("homologous"), "homolog");
        assert_eq!(porter_stem("effective"), "effect");
        assert_eq!(porter_stem("bowdlerize"), "bowdler");
        assert_eq!(porter_stem("probate"), "probat");
        assert_eq!(porter_stem("rate"), "rate");
        assert_eq!(porter_stem("cease"), "ceas");
        assert_eq!(porter_stem("controll"), "control");
        assert_eq!(porter_stem("roll"), "roll");
    }
}
