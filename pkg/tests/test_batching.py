import math

import pytest

from clique_kernels import generators as gen
from clique_kernels.batching import (
    batch_queries,
    equalize_k,
    group_size,
    plan_batches,
    trivial_or_compose,
)
from clique_kernels.graph import CliqueInstance, Graph, encoding_size
from clique_kernels.kernels import QuerySet, kernel_degeneracy, run_kernel
from clique_kernels.solver import Answer, brute_force_has_clique
from suite import suite_instances


def inst(g, k):
    return CliqueInstance(g, k)


class TestEqualize:
    def test_path_gains_apex(self):
        out, k_star = equalize_k([inst(gen.path(3), 2), inst(gen.complete(3), 3)])
        assert k_star == 3
        assert out[0].graph.n == 4 and out[0].k == 3
        assert out[1].graph == gen.complete(3)

    def test_identity(self):
        qs = [inst(gen.cycle(5), 3), inst(gen.complete(4), 3)]
        out, k_star = equalize_k(qs)
        assert out == qs and k_star == 3

    def test_empty_graph_stays_no(self):
        out, k_star = equalize_k([inst(Graph.empty(0), 1), inst(gen.complete(4), 4)])
        assert k_star == 4 and out[0].graph == gen.complete(3)
        assert brute_force_has_clique(out[0]) is Answer.NO

    def test_empty_input(self):
        with pytest.raises(ValueError):
            equalize_k([])


class TestCompose:
    def test_yes(self):
        out = trivial_or_compose([inst(gen.complete(3), 3), inst(gen.cycle(5), 3)])
        assert out.graph.n == 8 and out.k == 3
        assert brute_force_has_clique(out) is Answer.YES

    def test_single(self):
        q = inst(gen.cycle(5), 2)
        assert trivial_or_compose([q]) == q

    def test_no(self):
        out = trivial_or_compose([inst(gen.cycle(5), 3), inst(gen.cycle(7), 3)])
        assert brute_force_has_clique(out) is Answer.NO

    def test_empty(self):
        with pytest.raises(ValueError):
            trivial_or_compose([])

    def test_nested_composition_matches_flat(self):
        parts = [inst(gen.gnp(7, 0.5, seed=i), 2 + i % 3) for i in range(6)]
        flat = trivial_or_compose(parts)
        nested = trivial_or_compose([trivial_or_compose(parts[:3]), trivial_or_compose(parts[3:])])
        assert brute_force_has_clique(flat) is brute_force_has_clique(nested)
        expected = Answer.of(any(brute_force_has_clique(p) is Answer.YES for p in parts))
        assert brute_force_has_clique(flat) is expected


class TestBatch:
    def test_group_size_formula(self):
        assert group_size(0, 1000) == 1
        assert group_size(1, 16) == 4
        assert group_size(2, 16) == 16
        assert group_size(1, 1000) == math.ceil(math.log2(1000))

    def test_ten_queries_groups_of_four(self):
        plan = plan_batches(10, 1, 16)
        assert plan.group_size == 4
        assert [len(g) for g in plan.groups] == [4, 4, 2]

    def test_batched_count_ten(self):
        g = gen.gnp(10, 0.4, seed=3)
        qs = kernel_degeneracy(inst(g, 3))
        assert len(qs) == 10
        out = batch_queries(qs, 1, 16)
        assert len(out) == 3
        assert out.resolve(brute_force_has_clique) is qs.resolve(brute_force_has_clique)

    def test_c0_identity(self):
        qs = kernel_degeneracy(inst(gen.gnp(12, 0.4, seed=1), 3))
        assert batch_queries(qs, 0, encoding_size(gen.gnp(12, 0.4, seed=1))) == qs

    def test_immediate_answer_passes_through(self):
        qs = QuerySet((), "x", 0, immediate_answer=Answer.NO)
        assert batch_queries(qs, 2, 100) == qs

    @pytest.mark.parametrize("name", ["degeneracy", "oct", "dbd", "chordal", "loc"])
    def test_laws_on_random_kernels(self, name):
        for _, i in suite_instances(45, seed=5):
            raw = run_kernel(name, i)
            n = max(encoding_size(i.graph), 2)
            truth = raw.resolve(brute_force_has_clique)
            for c in (0, 1, 2):
                out = batch_queries(raw, c, n)
                g = group_size(c, n)
                if raw.immediate_answer is None:
                    assert len(out) == -(-len(raw) // g)
                    k_star = max((q.instance.k for q in raw.queries), default=0)
                    biggest = max((q.instance.graph.n for q in raw.queries), default=0)
                    assert all(q.instance.graph.n <= g * (biggest + k_star) for q in out.queries)
                assert out.resolve(brute_force_has_clique) is truth

    def test_invalid_arguments(self):
        with pytest.raises(ValueError):
            group_size(-1, 10)
        with pytest.raises(ValueError):
            group_size(1, 1)
