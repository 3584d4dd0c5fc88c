import random

import pytest

import oracles
from ascondrbg.ascon_hmac import hmac as ascon_mac
from ascondrbg.bitstring import BitString
from ascondrbg.framework import RESEED_INTERVAL, DrbgStatus, ScriptedEntropySource
from ascondrbg.hmac_drbg import (
    HmacDrbgState,
    hmac_generate,
    hmac_instantiate,
    hmac_reseed,
    hmac_update,
)


def as_bits(b: BitString) -> oracles.Bits:
    return (b.to_int(), len(b))


def random_kv(seed):
    rng = random.Random(seed)
    return (BitString(rng.getrandbits(256), 256), BitString(rng.getrandbits(256), 256))


class TestUpdate:
    def test_absent_data_is_two_calls(self):
        k, v = random_kv(1)
        k2, v2 = hmac_update(None, k, v)
        k_exp = ascon_mac(k.to_bytes(), v.to_bytes() + b"\x00")
        v_exp = ascon_mac(k_exp, v.to_bytes())
        assert k2.to_bytes() == k_exp
        assert v2.to_bytes() == v_exp

    def test_present_data_is_four_calls(self):
        k, v = random_kv(2)
        data = BitString.from_hex("ab")
        got = hmac_update(data, k, v)
        expected = oracles.hmac_update(as_bits(data), as_bits(k), as_bits(v))
        assert tuple(as_bits(x) for x in got) == expected

    def test_output_widths(self):
        k, v = random_kv(3)
        for data in (None, BitString.from_hex("00112233")):
            k2, v2 = hmac_update(data, k, v)
            assert len(k2) == 256
            assert len(v2) == 256

    def test_empty_equals_absent(self):
        k, v = random_kv(4)
        assert hmac_update(BitString.zeros(0), k, v) == hmac_update(None, k, v)


class TestGenerate:
    def _state(self, seed=5, counter=2):
        k, v = random_kv(seed)
        return HmacDrbgState(k, v, counter)

    def test_single_iteration_is_one_mac(self):
        state = self._state()
        status, bits, new_state = hmac_generate(state, 256)
        assert status is DrbgStatus.SUCCESS
        assert bits.to_bytes() == ascon_mac(state.k.to_bytes(), state.v.to_bytes())
        expected = oracles.hmac_generate(as_bits(state.k), as_bits(state.v),
                                         state.reseed_counter, 256, None)
        assert (as_bits(bits), (as_bits(new_state.k), as_bits(new_state.v),
                                new_state.reseed_counter)) == expected

    def test_two_iterations_for_300_bits(self):
        state = self._state(seed=6)
        _, bits, _ = hmac_generate(state, 300)
        requested, _ = oracles.hmac_generate(as_bits(state.k), as_bits(state.v),
                                             state.reseed_counter, 300, None)
        assert as_bits(bits) == requested
        v1 = ascon_mac(state.k.to_bytes(), state.v.to_bytes())
        v2 = ascon_mac(state.k.to_bytes(), v1)
        expected = BitString.from_bytes(v1 + v2).leftmost(300)
        assert bits == expected

    def test_add_input_runs_pre_and_post_update(self):
        state = self._state(seed=7)
        add = BitString.from_hex("cdef")
        _, bits, new_state = hmac_generate(state, 512, add)
        expected = oracles.hmac_generate(as_bits(state.k), as_bits(state.v),
                                         state.reseed_counter, 512, as_bits(add))
        assert (as_bits(bits), (as_bits(new_state.k), as_bits(new_state.v),
                                new_state.reseed_counter)) == expected

    def test_reseed_required_leaves_state_untouched(self):
        state = self._state(counter=RESEED_INTERVAL + 1)
        status, bits, new_state = hmac_generate(state, 256)
        assert status is DrbgStatus.RESEED_REQUIRED
        assert bits is None
        assert new_state == state

    def test_double_draw_differs(self):
        # the final update always runs, so identical consecutive requests
        # must produce different bits
        state = self._state(seed=8)
        _, bits1, state = hmac_generate(state, 256)
        _, bits2, _ = hmac_generate(state, 256)
        assert bits1 != bits2

    def test_uninstantiated(self):
        assert hmac_generate(None, 256).status is DrbgStatus.ERROR_FLAG

    def test_deterministic_transition(self):
        state = self._state(seed=9)
        assert hmac_generate(state, 300) == hmac_generate(state, 300)


class TestInstantiateReseed:
    def test_initial_constants_and_update(self):
        script = bytes(range(48))
        state = hmac_instantiate(ScriptedEntropySource(script))
        k0 = (0, 256)
        v0 = (int.from_bytes(b"\x01" * 32, "big"), 256)
        expected = oracles.hmac_update(oracles.from_bytes(script), k0, v0)
        assert (as_bits(state.k), as_bits(state.v)) == expected
        assert state.reseed_counter == 1

    def test_reseed_counter_and_material(self):
        state = hmac_instantiate(ScriptedEntropySource(bytes(48)))
        state = hmac_generate(state, 256)[2]
        entropy = bytes(range(32))
        add = BitString.from_hex("99aa")
        new_state = hmac_reseed(state, ScriptedEntropySource(entropy), add)
        material = oracles.concat(oracles.from_bytes(entropy), as_bits(add))
        expected = oracles.hmac_update(material, as_bits(state.k), as_bits(state.v))
        assert (as_bits(new_state.k), as_bits(new_state.v)) == expected
        assert new_state.reseed_counter == 1

    def test_reseed_absent_add_input(self):
        state = hmac_instantiate(ScriptedEntropySource(bytes(48)))
        entropy = bytes(range(32))
        new_state = hmac_reseed(state, ScriptedEntropySource(entropy))
        expected = oracles.hmac_update(oracles.from_bytes(entropy),
                                       as_bits(state.k), as_bits(state.v))
        assert (as_bits(new_state.k), as_bits(new_state.v)) == expected

    def test_entropy_error_propagates(self):
        from ascondrbg.framework import EntropyError
        with pytest.raises(EntropyError):
            hmac_instantiate(ScriptedEntropySource(bytes(47)))
