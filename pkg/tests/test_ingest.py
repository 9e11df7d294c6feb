"""Parser tests: contract cases, independent oracles, round-trips."""

import numpy as np
import pytest

from pragrank.errors import FormatError, ResourceError
from pragrank import ingest


def conllu_line(ident, form, upos):
    cols = [str(ident), form, "_", upos, "_", "_", "_", "_", "_", "_"]
    return "\t".join(cols)


class TestParseConllu:
    def test_two_tokens_one_sentence(self):
        text = "\n".join([
            conllu_line(1, "Did", "AUX"),
            conllu_line(2, "eat", "VERB"),
            "",
        ])
        corpus = ingest.parse_conllu(text)
        assert len(corpus.sentences) == 1
        assert corpus.sentences[0] == [("Did", "AUX"), ("eat", "VERB")]

    def test_multiword_range_skipped(self):
        text = "\n".join([
            conllu_line("3-4", "du", "X"),
            conllu_line(3, "de", "ADP"),
            conllu_line(4, "le", "DET"),
            "",
        ])
        corpus = ingest.parse_conllu(text)
        assert [t[0] for t in corpus.sentences[0]] == ["de", "le"]

    def test_empty_node_skipped(self):
        text = "\n".join([
            conllu_line(1, "word", "NOUN"),
            conllu_line("1.1", "ghost", "X"),
            "",
        ])
        corpus = ingest.parse_conllu(text)
        assert corpus.n_tokens == 1

    def test_comments_ignored(self):
        text = "# sent_id = 1\n# text = hi\n" + conllu_line(1, "hi", "INTJ") + "\n"
        corpus = ingest.parse_conllu(text)
        assert corpus.n_tokens == 1

    def test_empty_input_is_empty_corpus(self):
        assert ingest.parse_conllu("").sentences == []

    def test_wrong_column_count_names_line(self):
        text = conllu_line(1, "ok", "NOUN") + "\n2\tbroken\tline\n"
        with pytest.raises(FormatError) as err:
            ingest.parse_conllu(text)
        assert err.value.line == 2

    def test_bad_upos_rejected(self):
        with pytest.raises(FormatError):
            ingest.parse_conllu(conllu_line(1, "x", "VRB") + "\n")

    def test_token_count_matches_line_count_oracle(self, rng):
        # build a 500-token fixture, then recount with an independent
        # line-level oracle: plain-ID, non-comment, non-blank lines
        tags = sorted(ingest.UPOS_TAGS)
        lines = []
        expected = 0
        token_in_sentence = 0
        for i in range(700):
            kind = rng.integers(0, 10)
            if kind == 0:
                lines.append("# comment %d" % i)
            elif kind == 1 and token_in_sentence:
                lines.append("")
                token_in_sentence = 0
            elif kind == 2:
                lines.append(conllu_line(f"{token_in_sentence + 1}-{token_in_sentence + 2}",
                                         "mw", "X"))
            else:
                token_in_sentence += 1
                lines.append(conllu_line(token_in_sentence,
                                         f"w{i}", tags[rng.integers(0, len(tags))]))
                expected += 1
        text = "\n".join(lines) + "\n"

        oracle = 0
        for line in text.split("\n"):
            if not line.strip() or line.startswith("#"):
                continue
            ident = line.split("\t")[0]
            if "-" in ident or "." in ident:
                continue
            oracle += 1
        assert oracle == expected

        corpus = ingest.parse_conllu(text)
        assert corpus.n_tokens == oracle

    def test_round_trip(self):
        text = "\n".join([
            conllu_line(1, "You", "PRON"),
            conllu_line(2, "bet", "VERB"),
            "",
            conllu_line(1, "Sure", "INTJ"),
            "",
        ])
        corpus = ingest.parse_conllu(text)
        again = ingest.parse_conllu(ingest.serialize_conllu(corpus))
        assert again.sentences == corpus.sentences


class TestParseEmbeddings:
    def test_unit_normalization(self):
        text = "2 3\na 1 0 0\nb 0 2 0\n"
        emb = ingest.parse_embeddings(text)
        assert np.allclose(emb.vectors["a"], [1, 0, 0])
        assert np.allclose(emb.vectors["b"], [0, 1, 0])

    def test_dimension_mismatch(self):
        with pytest.raises(FormatError):
            ingest.parse_embeddings("1 3\na 1 2\n")

    def test_zero_vector_rejected(self):
        with pytest.raises(FormatError):
            ingest.parse_embeddings("1 2\na 0 0\n")

    def test_duplicates_keep_first(self):
        emb = ingest.parse_embeddings("2 2\na 1 0\na 0 1\n")
        assert emb.duplicate_words == 1
        assert np.allclose(emb.vectors["a"], [1, 0])

    def test_random_file_norms(self, rng):
        rows = ["100 50"]
        for i in range(100):
            vec = rng.normal(size=50)
            rows.append(f"w{i:03d} " + " ".join(repr(float(x)) for x in vec))
        emb = ingest.parse_embeddings("\n".join(rows))
        for vec in emb.vectors.values():
            assert abs(np.linalg.norm(vec) - 1.0) <= 1e-9

    def test_round_trip_is_stable(self, rng):
        rows = ["5 4"]
        for i in range(5):
            vec = rng.normal(size=4)
            rows.append(f"w{i} " + " ".join(repr(float(x)) for x in vec))
        emb = ingest.parse_embeddings("\n".join(rows))
        text1 = ingest.serialize_embeddings(emb)
        again = ingest.parse_embeddings(text1)
        for word in emb.vectors:
            assert np.allclose(emb.vectors[word], again.vectors[word], atol=1e-12)
        assert ingest.serialize_embeddings(again) == text1


class TestLexicon:
    def test_multimap_merge(self):
        lex = ingest.parse_lexicon("love\tliebe\nlove\tlieben\n", "en", "de")
        assert lex.entries["love"] == {"liebe", "lieben"}

    def test_lowercased(self):
        lex = ingest.parse_lexicon("Love\tLiebe\n", "en", "de")
        assert lex.translations("love") == {"liebe"}

    def test_round_trip(self):
        lex = ingest.parse_lexicon("b\ty\na\tx\na\tz\n", "en", "de")
        again = ingest.parse_lexicon(ingest.serialize_lexicon(lex), "en", "de")
        assert again.entries == lex.entries


class TestParallel:
    def test_basic(self):
        par = ingest.parse_parallel("a b\nc d\n", "x y\nz w\n", "en", "de")
        assert len(par.pairs) == 2
        assert par.pairs[0] == (["a", "b"], ["x", "y"])

    def test_unequal_counts_error(self):
        with pytest.raises(FormatError):
            ingest.parse_parallel("a\nb\n", "x\n", "en", "de")

    def test_empty_side_error(self):
        with pytest.raises(FormatError):
            ingest.parse_parallel("a\n\nb\n", "x\ny\nz\n", "en", "de")

    def test_round_trip(self):
        par = ingest.parse_parallel("a b\nc\n", "x\ny z\n", "en", "de")
        text_a, text_b = ingest.serialize_parallel(par)
        again = ingest.parse_parallel(text_a, text_b, "en", "de")
        assert again.pairs == par.pairs


class TestZeroShot:
    def test_ground_truth_order_from_rows(self):
        text = "transfer,target,score\nar,tr,0.61\nko,tr,0.58\nja,tr,0.55\n"
        table = ingest.parse_zeroshot(text, task="sa")
        ranked = sorted(["ar", "ko", "ja"],
                        key=lambda lang: -table.get(lang, "tr"))
        assert ranked == ["ar", "ko", "ja"]

    def test_duplicate_pair_error(self):
        with pytest.raises(FormatError):
            ingest.parse_zeroshot("transfer,target,score\na,b,1\na,b,2\n")

    def test_non_numeric_error(self):
        with pytest.raises(FormatError):
            ingest.parse_zeroshot("transfer,target,score\na,b,high\n")

    def test_round_trip(self):
        table = ingest.parse_zeroshot("transfer,target,score\na,b,0.25\nb,a,0.5\n")
        again = ingest.parse_zeroshot(ingest.serialize_zeroshot(table))
        assert again.scores == table.scores


class TestDistances:
    def test_range_error(self):
        with pytest.raises(FormatError):
            ingest.parse_distances("facet,lang1,lang2,value\ngeo,a,b,1.2\n")

    def test_unknown_facet(self):
        with pytest.raises(FormatError):
            ingest.parse_distances("facet,lang1,lang2,value\nweird,a,b,0.2\n")

    def test_symmetric_lookup(self):
        tables = ingest.parse_distances("facet,lang1,lang2,value\ngeo,a,b,0.3\n")
        assert tables["geo"].get("b", "a") == 0.3
        assert tables["geo"].get("a", "a") == 0.0

    def test_asymmetric_contradiction(self):
        text = "facet,lang1,lang2,value\ngeo,a,b,0.3\ngeo,b,a,0.4\n"
        with pytest.raises(FormatError):
            ingest.parse_distances(text)

    def test_round_trip(self):
        text = "facet,lang1,lang2,value\ngeo,a,b,0.3\nsyn,a,b,0.7\n"
        tables = ingest.parse_distances(text)
        again = ingest.parse_distances(ingest.serialize_distances(tables))
        assert {f: t.values for f, t in again.items()} == \
            {f: t.values for f, t in tables.items()}


class TestEmotionLexicon:
    def test_parse_and_lookup(self):
        text = "love\ten\tlove\nlove\tde\tliebe\npride\tde\tstolz\n"
        lex = ingest.parse_emotion_lexicon(text)
        assert lex.concepts == ["love", "pride"]
        assert lex.concept_words("de", "love") == ["liebe"]
        assert lex.all_words("de") == {"liebe", "stolz"}

    def test_round_trip(self):
        text = "love\tde\tliebe\nlove\tde\tlieben\npride\tde\tstolz\n"
        lex = ingest.parse_emotion_lexicon(text)
        again = ingest.parse_emotion_lexicon(ingest.serialize_emotion_lexicon(lex))
        assert again.concepts == lex.concepts
        assert again.words == lex.words


class TestSmallTables:
    def test_area_map(self):
        areas = ingest.parse_area_map("tr\tMiddle East\nko\tEast Asia\n")
        assert areas.areas["tr"] == "Middle East"
        again = ingest.parse_area_map(ingest.serialize_area_map(areas))
        assert again.areas == areas.areas

    def test_language_vectors(self):
        vecs = ingest.parse_language_vectors("aa\t1 2 3\nbb\t4 5 6\n")
        assert vecs.dim == 3
        assert np.allclose(vecs.vectors["bb"], [4, 5, 6])
        again = ingest.parse_language_vectors(ingest.serialize_language_vectors(vecs))
        assert again.dim == vecs.dim
        assert all(np.array_equal(again.vectors[k], vecs.vectors[k])
                   for k in vecs.vectors)

    def test_language_vector_dim_mismatch(self):
        with pytest.raises(FormatError):
            ingest.parse_language_vectors("aa\t1 2 3\nbb\t4 5\n")

    def test_wiki_sizes(self):
        table = ingest.parse_wiki_sizes("en\t6000000\ntr\t500000\n")
        assert table.counts["en"] == 6_000_000
        again = ingest.parse_wiki_sizes(ingest.serialize_wiki_sizes(table))
        assert again.counts == table.counts


class TestGoldPhrases:
    def test_parse_and_round_trip(self):
        text = "Keep An Eye peeled\ntake into account\nsingle\n"
        phrases = ingest.parse_gold_phrases(text)
        assert ("keep", "an", "eye", "peeled") in phrases
        assert ("take", "into", "account") in phrases
        assert all(len(p) >= 2 for p in phrases)  # single words dropped
        again = ingest.parse_gold_phrases(ingest.serialize_gold_phrases(phrases))
        assert again == phrases


class TestDispatch:
    def test_known_kinds(self):
        table = ingest.parse_tabular_resources(
            "transfer,target,score\na,b,1.0\n", "zeroshot")
        assert table.scores[("a", "b")] == 1.0

    def test_unknown_kind(self):
        with pytest.raises(ResourceError):
            ingest.parse_tabular_resources("", "mystery")
