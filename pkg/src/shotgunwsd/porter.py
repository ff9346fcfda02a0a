"""Porter suffix-stripping stemmer.

Implements the classic five-step algorithm in the variant used by the
author's reference implementation (the one the published reference
vocabulary corresponds to): words of length <= 2 are left alone, step 2
maps -bli to -ble rather than -abli to -able, and -logi to -log.

Only lowercase ASCII-alphabetic strings are stemmed; anything else is
returned unchanged so callers can feed raw tokens straight through.
"""

_VOWELS = "aeiou"


class _Word:
    """Word buffer under stemming.

    ``k`` is the index of the last live character (the buffer may be longer
    when a suffix has been dropped by moving ``k``); ``j`` marks the end of
    the stem for the most recent suffix match.
    """

    __slots__ = ("b", "k", "j")

    def __init__(self, word):
        self.b = word
        self.k = len(word) - 1
        self.j = 0

    def cons(self, i):
        ch = self.b[i]
        if ch in _VOWELS:
            return False
        if ch == "y":
            return i == 0 or not self.cons(i - 1)
        return True

    def measure(self):
        """Number of consonant-vowel sequences in b[0..j]."""
        i, n = 0, 0
        while True:
            if i > self.j:
                return n
            if not self.cons(i):
                break
            i += 1
        i += 1
        while True:
            while True:
                if i > self.j:
                    return n
                if self.cons(i):
                    break
                i += 1
            i += 1
            n += 1
            while True:
                if i > self.j:
                    return n
                if not self.cons(i):
                    break
                i += 1
            i += 1

    def vowel_in_stem(self):
        return any(not self.cons(i) for i in range(self.j + 1))

    def double_cons(self, i):
        return i > 0 and self.b[i] == self.b[i - 1] and self.cons(i)

    def cvc(self, i):
        # consonant-vowel-consonant ending at i, final consonant not w/x/y;
        # used to restore the -e of e.g. hop(e) but not snow, box, tray.
        if i < 2 or not self.cons(i) or self.cons(i - 1) or not self.cons(i - 2):
            return False
        return self.b[i] not in "wxy"

    def ends(self, suffix):
        length = len(suffix)
        if suffix[-1] != self.b[self.k]:
            return False
        if length > self.k + 1:
            return False
        if self.b[self.k - length + 1:self.k + 1] != suffix:
            return False
        self.j = self.k - length
        return True

    def set_tail(self, repl):
        self.b = self.b[:self.j + 1] + repl
        self.k = len(self.b) - 1


# (suffix, replacement) rules tried first-match-wins; replacement happens
# only when the remaining stem has measure > 0. Order within each group of
# shared endings matters (longest first).
_STEP2_RULES = (
    ("ational", "ate"), ("tional", "tion"),
    ("enci", "ence"), ("anci", "ance"),
    ("izer", "ize"),
    ("bli", "ble"), ("alli", "al"), ("entli", "ent"), ("eli", "e"), ("ousli", "ous"),
    ("ization", "ize"), ("ation", "ate"), ("ator", "ate"),
    ("alism", "al"), ("iveness", "ive"), ("fulness", "ful"), ("ousness", "ous"),
    ("aliti", "al"), ("iviti", "ive"), ("biliti", "ble"),
    ("logi", "log"),
)

_STEP3_RULES = (
    ("icate", "ic"), ("ative", ""), ("alize", "al"),
    ("iciti", "ic"), ("ical", "ic"),
    ("ful", ""), ("ness", ""),
)

# Step 4 drops the suffix outright when measure > 1; -ion additionally
# requires the stem to end in s or t.
_STEP4_SUFFIXES = (
    "al", "ance", "ence", "er", "ic", "able", "ible",
    "ant", "ement", "ment", "ent", "ion", "ou",
    "ism", "ate", "iti", "ous", "ive", "ize",
)


def _step1ab(w):
    if w.b[w.k] == "s":
        if w.ends("sses"):
            w.k -= 2
        elif w.ends("ies"):
            w.set_tail("i")
        elif w.b[w.k - 1] != "s":
            w.k -= 1
    if w.ends("eed"):
        if w.measure() > 0:
            w.k -= 1
    elif (w.ends("ed") or w.ends("ing")) and w.vowel_in_stem():
        w.k = w.j
        if w.ends("at"):
            w.set_tail("ate")
        elif w.ends("bl"):
            w.set_tail("ble")
        elif w.ends("iz"):
            w.set_tail("ize")
        elif w.double_cons(w.k):
            if w.b[w.k - 1] not in "lsz":
                w.k -= 1
        else:
            w.j = w.k
            if w.measure() == 1 and w.cvc(w.k):
                w.set_tail("e")


def _step1c(w):
    if w.ends("y") and w.vowel_in_stem():
        w.b = w.b[:w.k] + "i"


def _apply_rules(w, rules):
    for suffix, repl in rules:
        if w.ends(suffix):
            if w.measure() > 0:
                w.set_tail(repl)
            return


def _step4(w):
    for suffix in _STEP4_SUFFIXES:
        if w.ends(suffix):
            if suffix == "ion" and w.b[w.j] not in "st":
                return
            if w.measure() > 1:
                w.k = w.j
            return


def _step5(w):
    w.j = w.k
    if w.b[w.k] == "e":
        m = w.measure()
        if m > 1 or (m == 1 and not w.cvc(w.k - 1)):
            w.k -= 1
    if w.b[w.k] == "l" and w.double_cons(w.k) and w.measure() > 1:
        w.k -= 1


def porter_stem(word: str) -> str:
    """Stem a lowercase alphabetic word; other strings pass through unchanged."""
    word = word.lower()
    if len(word) <= 2 or not (word.isascii() and word.isalpha()):
        return word
    w = _Word(word)
    _step1ab(w)
    _step1c(w)
    _apply_rules(w, _STEP2_RULES)
    _apply_rules(w, _STEP3_RULES)
    _step4(w)
    _step5(w)
    return w.b[:w.k + 1]
