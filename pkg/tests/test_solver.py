import random

import pytest

from clique_kernels import generators as gen
from clique_kernels.graph import CliqueInstance, Graph, induced_subgraph
from clique_kernels.solver import Answer, SolveBudget, brute_force_has_clique, has_clique
from oracles import subset_has_clique


@pytest.mark.parametrize(
    "g,k,expected",
    [
        (gen.complete(4), 4, Answer.YES),
        (gen.cycle(5), 3, Answer.NO),
        (gen.petersen(), 3, Answer.NO),
        (gen.petersen(), 2, Answer.YES),
        (Graph.empty(3), 2, Answer.NO),
        (gen.complete(3), 5, Answer.NO),
    ],
)
def test_has_clique_examples(g, k, expected):
    assert has_clique(CliqueInstance(g, k)) is expected


@pytest.mark.parametrize(
    "g,k,expected",
    [(gen.complete(5), 5, Answer.YES), (Graph.empty(0), 1, Answer.NO), (Graph.empty(1), 1, Answer.YES)],
)
def test_brute_force_examples(g, k, expected):
    assert brute_force_has_clique(CliqueInstance(g, k)) is expected


def test_gnp20_matches_subset_enumeration():
    g = gen.gnp(20, 0.5, seed=20)
    expected = Answer.of(subset_has_clique(g, 5))
    assert has_clique(CliqueInstance(g, 5)) is expected
    assert brute_force_has_clique(CliqueInstance(g, 5)) is expected


def test_agreement_with_oracle():
    rng = random.Random(2024)
    count = 0
    for p in (0.1, 0.3, 0.5, 0.8):
        for i in range(260):
            g = gen.gnp(rng.randint(0, 25), p, seed=rng.randrange(10**9))
            k = rng.randint(1, 7)
            inst = CliqueInstance(g, k)
            assert has_clique(inst) is brute_force_has_clique(inst), (g, k)
            count += 1
    assert count >= 1000


def test_monotone_in_k():
    for i in range(100):
        g = gen.gnp(15, 0.5, seed=i)
        answers = [has_clique(CliqueInstance(g, k)) for k in range(1, 10)]
        # once No, always No
        first_no = answers.index(Answer.NO) if Answer.NO in answers else len(answers)
        assert all(a is Answer.YES for a in answers[:first_no])
        assert all(a is Answer.NO for a in answers[first_no:])


def test_subgraph_monotone():
    rng = random.Random(5)
    for i in range(100):
        g = gen.gnp(14, 0.5, seed=i)
        sub, _ = induced_subgraph(g, rng.sample(range(14), 9))
        for k in range(1, 6):
            if has_clique(CliqueInstance(sub, k)) is Answer.YES:
                assert has_clique(CliqueInstance(g, k)) is Answer.YES


def test_budget_exceeded_and_determinism():
    g = gen.gnp(60, 0.5, seed=3)
    inst = CliqueInstance(g, 12)
    assert has_clique(inst, SolveBudget(1)) is Answer.BUDGET_EXCEEDED
    assert has_clique(inst) is has_clique(inst)
    with pytest.raises(ValueError):
        SolveBudget(0)
