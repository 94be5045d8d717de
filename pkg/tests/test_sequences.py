from fractions import Fraction

import pytest

from hyperseq.errors import DomainError
from hyperseq.sequences import (
    HyperharmonicMethod,
    alpha,
    beta,
    fibonacci,
    gen_harmonic,
    harmonic,
    hyperharmonic,
    hyperharmonic_half_integer_alt,
    hyperharmonic_neg,
    hyperharmonic_rational_order,
)

F = Fraction

ALL_METHODS = list(HyperharmonicMethod)


class TestHarmonic:
    def test_values(self):
        assert harmonic(0) == 0
        assert harmonic(-3) == 0
        assert harmonic(1) == 1
        assert harmonic(3) == F(11, 6)

    def test_gen_harmonic(self):
        assert gen_harmonic(3, 2) == F(49, 36)
        assert gen_harmonic(0, 5) == 0
        assert gen_harmonic(-1, 2) == 0
        for n in range(12):
            assert gen_harmonic(n, 1) == harmonic(n)

    def test_gen_harmonic_nonpositive_order(self):
        assert gen_harmonic(4, 0) == 4
        assert gen_harmonic(3, -1) == 6
        assert gen_harmonic(3, -2) == 14


class TestHyperharmonic:
    def test_first_column_is_one(self):
        for r in range(1, 20):
            assert hyperharmonic(1, r) == 1

    def test_examples(self):
        assert hyperharmonic(2, 3) == F(7, 2)
        assert hyperharmonic(3, 2) == F(13, 3)
        assert hyperharmonic(0, 5) == 0
        assert hyperharmonic(4, 0) == F(1, 4)

    def test_0_0_is_domain_error(self):
        with pytest.raises(DomainError):
            hyperharmonic(0, 0)

    @pytest.mark.parametrize("method", ALL_METHODS)
    def test_def_oracle_agreement(self, method):
        # Brute-force iterated sums, independent of every method under test.
        rows = {0: [F(0)] + [F(1, k) for k in range(1, 26)]}
        for r in range(1, 7):
            prev = rows[r - 1]
            row = [F(0)]
            for n in range(1, 26):
                row.append(row[-1] + prev[n])
            rows[r] = row
        for r in range(1, 7):
            for n in range(26):
                assert hyperharmonic(n, r, method) == rows[r][n]

    def test_lower_recurrence(self):
        for n in range(1, 30):
            for r in range(1, 10):
                assert hyperharmonic(n, r + 1) == alpha(n, r) * hyperharmonic(
                    n - 1, r + 1
                ) + beta(n, r)

    def test_upper_recurrence(self):
        for n in range(1, 30):
            for r in range(1, 10):
                assert (alpha(n, r) - 1) * hyperharmonic(n, r + 1) == alpha(
                    n, r
                ) * hyperharmonic(n, r) - beta(n, r)

    def test_pascal_type(self):
        for n in range(1, 30):
            for r in range(1, 10):
                assert hyperharmonic(n, r + 1) == hyperharmonic(n, r) + hyperharmonic(
                    n - 1, r + 1
                )

    def test_second_order_closed_form(self):
        for n in range(1, 201):
            assert hyperharmonic(n, 2) == (n + 1) * harmonic(n) - n


class TestNegativeOrder:
    def test_examples(self):
        assert hyperharmonic_neg(3, 1) == F(-1, 6)
        assert hyperharmonic_neg(1, 5) == 1
        assert hyperharmonic_neg(2, 3) == 0
        assert hyperharmonic_neg(5, 2) == F(1, 30)

    def test_bad_args(self):
        with pytest.raises(DomainError):
            hyperharmonic_neg(0, 1)
        with pytest.raises(DomainError):
            hyperharmonic_neg(2, 0)

    def test_matches_downward_recurrence(self):
        # Iterate h(n, s-1) = h(n, s) - h(n-1, s) down from the order-zero
        # row and compare on the n > r region where the closed form applies.
        top = 31
        row = [None] + [F(1, n) for n in range(1, top + 1)]  # order 0
        for r in range(1, 30):  # row becomes order -r
            nxt = [None] * (top + 1)
            for n in range(r + 1, top + 1):
                if row[n] is not None and row[n - 1] is not None:
                    nxt[n] = row[n] - row[n - 1]
            row = nxt
            for n in range(2, top + 1):
                if r < n:
                    assert hyperharmonic_neg(n, r) == row[n], (n, r)


class TestRationalOrder:
    def test_integer_consistency(self):
        for n in range(1, 12):
            for r in range(1, 8):
                assert hyperharmonic_rational_order(n, F(r)) == hyperharmonic(n, r)

    def test_half_values(self):
        assert hyperharmonic_rational_order(1, F(1, 2)) == 1
        assert hyperharmonic_rational_order(2, F(1, 2)) == 1

    def test_pole_names_offset(self):
        with pytest.raises(DomainError, match="i=2"):
            hyperharmonic_rational_order(4, F(-2))

    def test_alt_convention_base(self):
        # At order 1/2 the alternative reading is C(n-1/2,n)(H(2n)-H(n)).
        from hyperseq.exactnum import binomial_general

        for n in range(1, 15):
            expected = binomial_general(F(n) - F(1, 2), n) * (
                harmonic(2 * n) - harmonic(n)
            )
            assert hyperharmonic_half_integer_alt(n, F(1, 2)) == expected

    def test_alt_convention_rejects_non_half(self):
        with pytest.raises(DomainError):
            hyperharmonic_half_integer_alt(3, F(1, 3))


class TestCoefficients:
    def test_examples(self):
        assert alpha(2, 3) == F(5, 2)
        assert beta(2, 1) == 1

    def test_symmetries(self):
        for n in range(1, 21):
            for r in range(1, 21):
                assert beta(n, r) == beta(r, n)
                assert alpha(n, r) == F(r, n) * alpha(r, n)


class TestConcurrency:
    def test_caches_safe_under_threads(self):
        # Fresh-ish stress: many threads hammer every cached family at once
        # and every result must match a serially computed table.
        import concurrent.futures

        expected_h = {
            (n, r): hyperharmonic(n, r, HyperharmonicMethod.CONV)
            for n in range(0, 40)
            for r in range(1, 8)
        }
        expected_g = {
            (n, m): sum((F(1, k**m) if m > 0 else F(k**-m) for k in range(1, n + 1)), F(0))
            for n in range(0, 40)
            for m in range(-2, 4)
        }

        def worker(seed):
            import random

            rng = random.Random(seed)
            for _ in range(200):
                n = rng.randint(0, 39)
                r = rng.randint(1, 7)
                m = rng.randint(-2, 3)
                method = rng.choice(ALL_METHODS)
                assert hyperharmonic(n, r, method) == expected_h[(n, r)]
                assert gen_harmonic(n, m) == expected_g[(n, m)]
                fibonacci(rng.randint(-60, 60))
            return seed

        with concurrent.futures.ThreadPoolExecutor(max_workers=8) as pool:
            assert sorted(pool.map(worker, range(16))) == list(range(16))


class TestFibonacci:
    def test_examples(self):
        assert fibonacci(10) == 55
        assert fibonacci(0) == 0
        assert fibonacci(1) == 1
        assert fibonacci(-1) == 1
        assert fibonacci(-2) == -1
        assert fibonacci(-3) == 2

    def test_recurrence_both_signs(self):
        for k in range(-40, 41):
            assert fibonacci(k) == fibonacci(k - 1) + fibonacci(k - 2)

    def test_sign_rule(self):
        for k in range(0, 41):
            assert fibonacci(-k) == (-1) ** (k + 1) * fibonacci(k)
