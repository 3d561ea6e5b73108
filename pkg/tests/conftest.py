import random

import pytest

from svset.scale import (
    BoolScale,
    ChainScale,
    IFSDeltaScale,
    RoughChainScale,
    Scale,
    UnitRationalScale,
    interval_scale,
    m3_scale,
    product_scale,
)
from svset.sets import ParamSet, SVSet, Universe, unparameterized


@pytest.fixture
def u3():
    return Universe("U", ("x", "y", "z"))


@pytest.fixture
def u4():
    return Universe("U", ("a", "b", "c", "d"))


@pytest.fixture
def params2():
    return ParamSet("E", ("p", "q"))


def random_svset(universe: Universe, params: ParamSet, scale: Scale, rng: random.Random) -> SVSet:
    return SVSet.from_function(universe, params, scale, lambda x, e: scale.sample(rng))


def random_unparam(universe: Universe, scale: Scale, rng: random.Random) -> SVSet:
    return random_svset(universe, unparameterized(), scale, rng)


# a pool of scales used by cross-cutting randomized checks
def scale_pool():
    return [
        BoolScale(),
        ChainScale(5),
        UnitRationalScale(),
        RoughChainScale(),
        IFSDeltaScale(),
        m3_scale(),
        product_scale(UnitRationalScale(), ChainScale(5)),
        interval_scale(UnitRationalScale()),
    ]
