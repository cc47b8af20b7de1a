import sys
from pathlib import Path

from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from surreal import ordinal as O  # noqa: E402
from surreal.surreal_core import Surreal, from_sign_list  # noqa: E402

settings.register_profile("default", max_examples=100, deadline=None)
settings.load_profile("default")

signs = st.sampled_from([1, -1])
finite_signs = st.lists(signs, max_size=8)
finite_numbers = finite_signs.map(from_sign_list)

# ordinals below omega^omega as {exponent: coefficient}
small_ordinal_dicts = st.dictionaries(st.integers(0, 3), st.integers(1, 4), max_size=3)


def ordinal_from_dict(d):
    return O.Ordinal._make((O.from_int(e), c) for e, c in sorted(d.items(), reverse=True))


ordinals = small_ordinal_dicts.map(ordinal_from_dict)
run_lengths = st.sampled_from([O.parse_ordinal(s) for s in
                               ("1", "2", "3", "w", "w+1", "w*2", "w^2", "w^2+3", "w^w")])


@st.composite
def run_numbers(draw, max_runs=3):
    """Numbers given by a few runs, some of transfinite length."""
    sign = draw(signs)
    runs = []
    for _ in range(draw(st.integers(0, max_runs))):
        runs.append((sign, draw(run_lengths)))
        sign = -sign
    return Surreal(runs)


@st.composite
def single_run_numbers(draw):
    return Surreal([(draw(signs), draw(run_lengths))])
