import logging

import pytest
from hypothesis import given
from hypothesis import strategies as st

from shotgunwsd.corpus import POS
from shotgunwsd.errors import ParseError
from shotgunwsd.lexicon import (
    ADMITTED_RELATIONS, Lexicon, PointerKind, SenseEntry, Synset, SynsetId,
    build_disamb_vocabulary, content_words, load_lexicon, load_stopwords,
    own_disamb_vocabulary, parse_wordnet, related_synsets,
)


class TestToyLoading:
    def test_synset_count(self, toy_lexicon):
        assert len(toy_lexicon) == 32

    def test_sense_ordering(self, toy_lexicon):
        entries = toy_lexicon.senses_of("bank", POS.NOUN)
        assert [e.sense_number for e in entries] == [1, 2]
        assert [e.synset.offset for e in entries] == [1, 2]

    def test_three_way_polysemy(self, toy_lexicon):
        assert len(toy_lexicon.senses_of("note", POS.NOUN)) == 3

    def test_lookup_is_case_insensitive(self, toy_lexicon):
        assert toy_lexicon.senses_of("Bank", POS.NOUN) == \
            toy_lexicon.senses_of("bank", POS.NOUN)

    def test_unknown_lemma_has_no_senses(self, toy_lexicon):
        assert toy_lexicon.senses_of("xylophone", POS.NOUN) == ()

    def test_pos_distinguishes_entries(self, toy_lexicon):
        assert toy_lexicon.senses_of("bank", POS.VERB) == ()

    def test_toy_sense_keys(self, toy_lexicon):
        entry = toy_lexicon.senses_of("bank", POS.NOUN)[1]
        assert toy_lexicon.sense_key(entry) == "bank%n#2"

    def test_multiword_lemma(self, toy_lexicon):
        entry, = toy_lexicon.senses_of("savings_bank", POS.NOUN)
        assert entry.synset.offset == 1

    def test_synset_contents(self, toy_lexicon):
        synset = toy_lexicon.synset(SynsetId(POS.NOUN, 1))
        assert synset.lemmas == ("bank", "savings_bank")
        assert synset.gloss == "a financial institution that accepts deposits"
        assert synset.examples == ("he cashed a check at the bank",)


class TestToyValidation:
    def _load(self, tmp_path, body):
        path = tmp_path / "lex.txt"
        path.write_text(body)
        return load_lexicon(path)

    @pytest.mark.parametrize("body,fragment", [
        ("synset 1 n | a | g\nsynset 1 n | b | g\n", "duplicate synset id"),
        ("synset 1 q | a | g\n", "expected POS letter"),
        ("synset 1 n | a | g\nptr 1 cousin 1\n", "unknown pointer kind"),
        ("synset 1 n | a | g\nptr 1 hyponym 9\n", "not declared"),
        ("synset 1 n | a | g\nptr 9 hyponym 1\n", "not declared"),
        ("synset 1 n | | g\n", "no lemmas"),
        ("synset 1 n | a | g\nsense a n 2 1\n", "not 1..N"),
        ("synset 1 n | a | g\nsense a n 1 1\nsense a n 1 1\n", "duplicate sense number"),
        ("synset 1 n | a | g\nsense a n 1 7\n", "undeclared synset"),
        ("synset 1 n | a | g\nsense a n 0 1\n", "start at 1"),
        ("bogus 1\n", "unknown line kind"),
        ("synset x n | a | g\n", "integer"),
    ])
    def test_malformed_files(self, tmp_path, body, fragment):
        with pytest.raises(ParseError, match=fragment):
            self._load(tmp_path, body)

    def test_error_carries_location(self, tmp_path):
        path = tmp_path / "lex.txt"
        path.write_text("synset 1 n | a | g\nbogus\n")
        with pytest.raises(ParseError) as exc:
            load_lexicon(path)
        assert exc.value.line == 2 and str(path) in str(exc.value)


class TestRelationFilters:
    def kinds(self, lex, offset, pos=POS.NOUN):
        synset = lex.synset(SynsetId(pos, offset))
        return [kind for kind, _ in related_synsets(lex, synset)]

    def test_noun_meronym_kept_hypernym_dropped(self, toy_lexicon):
        assert self.kinds(toy_lexicon, 1) == [PointerKind.MERONYM]

    def test_noun_holonym_dropped(self, toy_lexicon):
        assert self.kinds(toy_lexicon, 6) == []

    def test_verb_kinds(self, toy_lexicon):
        assert self.kinds(toy_lexicon, 21, POS.VERB) == \
            [PointerKind.HYPERNYM, PointerKind.HYPONYM]
        assert self.kinds(toy_lexicon, 22, POS.VERB) == []      # see_also dropped
        assert self.kinds(toy_lexicon, 25, POS.VERB) == [PointerKind.CAUSE]

    def test_adjective_kinds(self, toy_lexicon):
        assert self.kinds(toy_lexicon, 30, POS.ADJECTIVE) == \
            [PointerKind.PERTAINYM]                             # domain_topic dropped
        assert self.kinds(toy_lexicon, 31, POS.ADJECTIVE) == \
            [PointerKind.SIMILAR_TO, PointerKind.SEE_ALSO]
        assert self.kinds(toy_lexicon, 32, POS.ADJECTIVE) == \
            [PointerKind.ANTONYM, PointerKind.ATTRIBUTE]

    def test_adverb_kinds(self, toy_lexicon):
        assert self.kinds(toy_lexicon, 40, POS.ADVERB) == \
            [PointerKind.ANTONYM, PointerKind.PERTAINYM]
        assert self.kinds(toy_lexicon, 41, POS.ADVERB) == \
            [PointerKind.DOMAIN_TOPIC]                          # similar_to dropped

    @given(pos=st.sampled_from([POS.NOUN, POS.VERB, POS.ADJECTIVE, POS.ADVERB]),
           kinds=st.lists(st.sampled_from(list(PointerKind)), max_size=8))
    def test_expansion_never_leaks_unadmitted_kinds(self, pos, kinds):
        target = SynsetId(POS.NOUN, 99)
        source = SynsetId(pos, 1)
        synsets = {
            source: Synset(source, ("w",), "g", (), tuple((k, target) for k in kinds)),
            target: Synset(target, ("t",), "g", (), ()),
        }
        lex = Lexicon(synsets, {}, key_style="toy")
        got = [k for k, _ in related_synsets(lex, synsets[source])]
        assert set(got) <= ADMITTED_RELATIONS[pos]
        expected = [k for k in kinds if k in ADMITTED_RELATIONS[pos]]
        assert got == expected

    def test_dangling_pointer_skipped_with_warning(self, caplog):
        source = SynsetId(POS.NOUN, 1)
        synsets = {source: Synset(source, ("w",), "g", (),
                                  ((PointerKind.MERONYM, SynsetId(POS.NOUN, 42)),))}
        lex = Lexicon(synsets, {}, key_style="toy")
        with caplog.at_level(logging.WARNING):
            assert related_synsets(lex, synsets[source]) == []
        assert "42" in caplog.text


class TestContentWords:
    def test_stopwords_and_case(self, stopwords):
        words = content_words("The bank ACCEPTS a deposit", stopwords)
        assert words == ["bank", "accepts", "deposit"]

    def test_underscores_split(self, stopwords):
        assert content_words("savings_bank", stopwords) == ["savings", "bank"]

    def test_apostrophes_stay_inside_tokens(self, stopwords):
        assert content_words("the bank's vault", stopwords) == ["bank's", "vault"]

    def test_punctuation_dropped(self, stopwords):
        assert content_words("money, money; money.", stopwords) == \
            ["money", "money", "money"]


class TestDisambVocabulary:
    def test_expanded_sequences(self, toy_lexicon, stopwords):
        synset = toy_lexicon.synset(SynsetId(POS.NOUN, 1))
        vocab = build_disamb_vocabulary(toy_lexicon, synset, stopwords)
        assert vocab.sequences == (
            ("bank", "save", "bank"),
            ("financi", "institut", "accept", "deposit"),
            ("cash", "check", "bank"),
            ("vault",),
            ("strongroom", "bank", "keep", "monei"),
        )

    def test_word_set_keeps_raw_words(self, toy_lexicon, stopwords):
        synset = toy_lexicon.synset(SynsetId(POS.NOUN, 1))
        vocab = build_disamb_vocabulary(toy_lexicon, synset, stopwords)
        assert vocab.word_set == frozenset({
            "bank", "savings", "financial", "institution", "accepts",
            "deposits", "cashed", "check", "vault", "strongroom", "keeps",
            "money"})

    def test_own_vocabulary_has_no_expansion(self, toy_lexicon, stopwords):
        synset = toy_lexicon.synset(SynsetId(POS.NOUN, 1))
        vocab = own_disamb_vocabulary(synset, stopwords)
        assert len(vocab.sequences) == 3

    def test_all_stopword_sources_are_dropped(self, stopwords):
        sid = SynsetId(POS.NOUN, 1)
        synset = Synset(sid, ("vault",), "of the", ("such a",), ())
        vocab = own_disamb_vocabulary(synset, stopwords)
        assert vocab.sequences == (("vault",),)


class TestStopwords:
    def test_default_list(self, stopwords):
        assert {"the", "of", "and", "move", "interest"} <= stopwords
        assert "bank" not in stopwords

    def test_custom_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("# comment\nfoo\nBAR\n")
        assert load_stopwords(path) == frozenset({"foo", "bar"})


class TestWordNetParsing:
    def test_synset_count(self, mini_wordnet):
        lex = parse_wordnet(mini_wordnet[0])
        assert len(lex) == 11

    def test_offsets_match_file_positions(self, mini_wordnet):
        lex = parse_wordnet(mini_wordnet[0])
        directory, offsets = mini_wordnet
        assert lex.synset(SynsetId(POS.NOUN, offsets["car"])).lemmas == \
            ("car", "automobile")

    def test_polysemous_index_entry(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        entries = lex.senses_of("bank", POS.NOUN)
        assert [e.synset.offset for e in entries] == \
            [offsets["bank_fin"], offsets["bank_river"]]

    def test_wordnet_sense_keys(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        noun = lex.senses_of("bank", POS.NOUN)[0]
        verb = lex.senses_of("run", POS.VERB)[0]
        assert lex.sense_key(noun) == f"bank%1:{offsets['bank_fin']:08d}"
        assert lex.sense_key(verb) == f"run%2:{offsets['run']:08d}"

    def test_adjective_markers_stripped(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        head = lex.synset(SynsetId(POS.ADJECTIVE, offsets["fast_head"]))
        assert head.lemmas == ("fast", "quick")

    def test_satellites_fold_into_adjective_pos(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        entry, = lex.senses_of("speedy", POS.ADJECTIVE)
        assert entry.synset.pos is POS.ADJECTIVE

    def test_pointer_symbols_and_cross_pos_targets(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        car = lex.synset(SynsetId(POS.NOUN, offsets["car"]))
        assert car.pointers == (
            (PointerKind.HYPERNYM, SynsetId(POS.NOUN, offsets["vehicle"])),
            (PointerKind.MERONYM, SynsetId(POS.NOUN, offsets["wheel"])),
        )
        automotive = lex.synset(SynsetId(POS.ADJECTIVE, offsets["automotive"]))
        assert automotive.pointers == (
            (PointerKind.PERTAINYM, SynsetId(POS.NOUN, offsets["car"])),)

    def test_gloss_examples_split(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        run = lex.synset(SynsetId(POS.VERB, offsets["run"]))
        assert run.gloss == "move fast"
        assert run.examples == ("he ran to the store",)

    def test_verb_frames_are_skipped(self, mini_wordnet):
        directory, offsets = mini_wordnet
        lex = parse_wordnet(directory)
        run = lex.synset(SynsetId(POS.VERB, offsets["run"]))
        assert run.pointers == (
            (PointerKind.HYPERNYM, SynsetId(POS.VERB, offsets["travel"])),)

    def test_missing_file_is_reported(self, tmp_path):
        with pytest.raises(ParseError, match="missing WordNet file"):
            parse_wordnet(tmp_path)

    def test_malformed_data_line_location(self, tmp_path, mini_wordnet):
        import shutil
        directory = tmp_path / "db"
        shutil.copytree(mini_wordnet[0], directory)
        path = directory / "data.adv"
        path.write_text(path.read_text() + "00000099 02 r zz broken\n")
        with pytest.raises(ParseError) as exc:
            parse_wordnet(directory)
        assert exc.value.line == 4

    def test_index_offset_must_exist(self, tmp_path, mini_wordnet):
        import shutil
        directory = tmp_path / "db"
        shutil.copytree(mini_wordnet[0], directory)
        path = directory / "index.adv"
        path.write_text(path.read_text() + "slow r 1 0 1 0 00000099\n")
        with pytest.raises(ParseError, match="not in data file"):
            parse_wordnet(directory)

    def test_load_lexicon_dispatches_on_directory(self, mini_wordnet):
        lex = load_lexicon(mini_wordnet[0])
        assert lex.senses_of("wheel", POS.NOUN)


class TestLexiconIteration:
    def test_iterates_synsets(self, toy_lexicon):
        offsets = sorted(s.id.offset for s in toy_lexicon if s.id.pos is POS.NOUN)
        assert offsets[:3] == [1, 2, 3]

    def test_sense_entry_shape(self, toy_lexicon):
        entry = toy_lexicon.senses_of("river", POS.NOUN)[0]
        assert entry == SenseEntry("river", POS.NOUN, 1, SynsetId(POS.NOUN, 3))
