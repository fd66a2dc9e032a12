import random

import pytest

from hilbx.classical import (
    HillKey,
    PlayfairKey,
    ecb_repeat_detector,
    hill_decrypt,
    hill_encrypt,
    hill_key_inverse,
    hill_kpa_attack,
    parse_pairs_text,
    playfair_decrypt,
    playfair_encrypt,
    playfair_prepare,
    text_to_columns,
)
from hilbx.errors import AttackInconclusiveError, DomainError, FormatError


def random_hill_key(rng, m):
    while True:
        rows = [[rng.randrange(26) for _ in range(m)] for _ in range(m)]
        try:
            return HillKey.from_rows(rows)
        except DomainError:
            continue


class TestPlayfairPrepare:
    def test_balloon(self):
        assert playfair_prepare("balloon") == ["ba", "lx", "lo", "on"]

    def test_even_clean_pair(self):
        assert playfair_prepare("ab") == ["ab"]

    def test_double_letter_with_leftover(self):
        assert playfair_prepare("aa") == ["ax", "ax"]

    def test_double_x_takes_q(self):
        assert playfair_prepare("xx") == ["xq", "xq"]

    def test_j_merges_into_i(self):
        assert playfair_prepare("jam") == ["ia", "mx"]

    def test_empty(self):
        assert playfair_prepare("") == []

    def test_rejects_non_letters(self):
        with pytest.raises(DomainError):
            playfair_prepare("a b")


class TestPlayfairKey:
    def test_keyword_first_then_alphabet(self):
        key = PlayfairKey.from_keyword("monarchy")
        assert key.grid == "monarchybdefgiklpqstuvwxz"

    def test_duplicate_grid_rejected(self):
        with pytest.raises(DomainError):
            PlayfairKey("a" * 25)


class TestPlayfairCipher:
    def test_row_rule_with_wrap(self):
        key = PlayfairKey.from_keyword("monarchy")
        assert playfair_encrypt(key, "ar") == "rm"

    def test_column_rule_with_wrap(self):
        key = PlayfairKey.from_keyword("monarchy")
        assert playfair_encrypt(key, "mu") == "cm"

    def test_rectangle_rule_swaps_columns(self):
        key = PlayfairKey.from_keyword("monarchy")
        # h at (1,1), s at (3,3): each keeps its row, takes the other's column
        assert playfair_encrypt(key, "hs") == "bp"
        assert playfair_decrypt(key, "bp") == "hs"

    def test_roundtrip_equals_prepared(self):
        rng = random.Random(17)
        key = PlayfairKey.from_keyword("conundrum")
        letters = "abcdefghijklmnopqrstuvwxyz"
        for _ in range(40):
            text = "".join(rng.choice(letters) for _ in range(rng.randint(0, 30)))
            prepared = "".join(playfair_prepare("".join("i" if c == "j" else c for c in text)))
            assert playfair_decrypt(key, playfair_encrypt(key, text)) == prepared

    def test_encryption_bijection_on_digrams(self):
        key = PlayfairKey.from_keyword("keyword")
        seen = set()
        for a in key.grid:
            for b in key.grid:
                if a == b:
                    continue
                out = playfair_encrypt(key, a + b)
                assert out not in seen
                seen.add(out)

    def test_decrypt_validates_input(self):
        key = PlayfairKey.from_keyword("monarchy")
        with pytest.raises(DomainError):
            playfair_decrypt(key, "abc")
        with pytest.raises(DomainError):
            playfair_decrypt(key, "aj")


class TestHill:
    def test_worked_example(self):
        key = HillKey.from_rows([[3, 3], [2, 5]])
        assert hill_encrypt(key, "help") == "hiat"

    def test_identity_key(self):
        key = HillKey.from_rows([[1, 0], [0, 1]])
        assert hill_encrypt(key, "test") == "test"

    def test_known_inverse(self):
        key = HillKey.from_rows([[3, 3], [2, 5]])
        assert hill_key_inverse(key).mat == ((15, 17), (20, 9))

    def test_key_times_inverse_is_identity(self):
        rng = random.Random(19)
        for m in (2, 3, 4):
            key = random_hill_key(rng, m)
            inv = hill_key_inverse(key)
            prod = [
                [sum(key.mat[i][k] * inv.mat[k][j] for k in range(m)) % 26 for j in range(m)]
                for i in range(m)
            ]
            assert prod == [[int(i == j) for j in range(m)] for i in range(m)]

    def test_roundtrip_with_padding(self):
        rng = random.Random(20)
        letters = "abcdefghijklmnopqrstuvwxyz"
        for m in (2, 3):
            key = random_hill_key(rng, m)
            for _ in range(20):
                text = "".join(rng.choice(letters) for _ in range(rng.randint(1, 24)))
                padded = text + "x" * (-len(text) % m)
                assert hill_decrypt(key, hill_encrypt(key, text)) == padded

    def test_non_invertible_key_rejected_at_construction(self):
        with pytest.raises(DomainError, match="invertible"):
            HillKey.from_rows([[2, 4], [6, 8]])  # det = -8, shares 2 with 26

    def test_strips_and_casefolds(self):
        key = HillKey.from_rows([[3, 3], [2, 5]])
        assert hill_encrypt(key, "He lp!") == "hiat"

    def test_decrypt_validates_length(self):
        key = HillKey.from_rows([[3, 3], [2, 5]])
        with pytest.raises(DomainError):
            hill_decrypt(key, "abc")


class TestHillAttack:
    def test_worked_example(self):
        pairs = list(zip(text_to_columns("help", 2), text_to_columns("hiat", 2)))
        assert hill_kpa_attack(pairs).mat == ((3, 3), (2, 5))

    def test_identity_key_recovered(self):
        key = HillKey.from_rows([[1, 0], [0, 1]])
        plain = "azza"
        pairs = list(zip(text_to_columns(plain, 2), text_to_columns(hill_encrypt(key, plain), 2)))
        assert hill_kpa_attack(pairs).mat == key.mat

    def test_recovers_random_keys_exactly(self):
        rng = random.Random(21)
        letters = "abcdefghijklmnopqrstuvwxyz"
        recovered = 0
        while recovered < 60:
            m = rng.choice((2, 3))
            key = random_hill_key(rng, m)
            plain = "".join(rng.choice(letters) for _ in range(m * m))
            pairs = list(
                zip(text_to_columns(plain, m), text_to_columns(hill_encrypt(key, plain), m))
            )
            try:
                attacked = hill_kpa_attack(pairs)
            except AttackInconclusiveError:
                continue
            assert attacked.mat == key.mat
            recovered += 1

    def test_singular_plaintext_inconclusive(self):
        pairs = list(zip(text_to_columns("aaaa", 2), text_to_columns("bbbb", 2)))
        with pytest.raises(AttackInconclusiveError):
            hill_kpa_attack(pairs)

    def test_pair_count_must_match_size(self):
        pairs = list(zip(text_to_columns("help", 2), text_to_columns("hiat", 2)))
        with pytest.raises(DomainError):
            hill_kpa_attack(pairs[:1])


class TestRepeatDetector:
    def test_all_pairs_reported(self):
        assert ecb_repeat_detector(["a", "b", "a", "a"]) == [(0, 2), (0, 3), (2, 3)]

    def test_empty(self):
        assert ecb_repeat_detector([]) == []

    def test_eight_identical(self):
        assert len(ecb_repeat_detector(["x"] * 8)) == 28


class TestPairsFile:
    def test_parse_and_attack(self):
        pairs = parse_pairs_text("P=help C=hiat\n", 2)
        assert hill_kpa_attack(pairs).mat == ((3, 3), (2, 5))

    def test_multiple_lines_aggregate(self):
        pairs = parse_pairs_text("P=he C=hi\nP=lp C=at\n", 2)
        assert len(pairs) == 2

    @pytest.mark.parametrize(
        "bad",
        [
            "help hiat\n",
            "P=help C=hia\n",
            "P=hel C=hia\n",
            "P=he!p C=hiat\n",
            "",
        ],
    )
    def test_malformed(self, bad):
        with pytest.raises(FormatError):
            parse_pairs_text(bad, 2)
