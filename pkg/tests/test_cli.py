import pytest

from ascondrbg.cli import main

SEED = "00112233445566778899aabbccddeeff" * 4  # 64 bytes of scripted entropy


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestGenerate:
    def test_deterministic_with_seed(self, capsys):
        args = ("generate", "--mechanism", "ascon-ctr", "--bytes", "32",
                "--seed-hex", SEED)
        code1, out1, _ = run(capsys, *args)
        code2, out2, _ = run(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        assert len(out1.strip()) == 64

    def test_os_entropy_runs_differ(self, capsys):
        args = ("generate", "--mechanism", "aes128-ctr", "--bytes", "16")
        _, out1, _ = run(capsys, *args)
        _, out2, _ = run(capsys, *args)
        assert out1 != out2

    def test_hex_length_contract(self, capsys):
        code, out, _ = run(capsys, "generate", "--mechanism", "ascon-hash",
                           "--bytes", "32", "--seed-hex", SEED)
        assert code == 0
        assert len(out.strip()) == 64
        int(out.strip(), 16)

    def test_add_input_changes_output(self, capsys):
        base = ("generate", "--mechanism", "ascon-hmac", "--bytes", "16",
                "--seed-hex", SEED)
        _, plain, _ = run(capsys, *base)
        _, mixed, _ = run(capsys, *base, "--add-input-hex", "ab")
        assert plain != mixed

    def test_raw_output_to_file(self, tmp_path, capsys):
        out_file = tmp_path / "bytes.bin"
        code, _, _ = run(capsys, "generate", "--mechanism", "sha256-hmac",
                         "--bytes", "40", "--seed-hex", SEED,
                         "--format", "raw", "--out", str(out_file))
        assert code == 0
        assert len(out_file.read_bytes()) == 40

    def test_large_request_split_across_calls(self, capsys):
        # 2**19 bits per call = 65536 bytes; ask for more to force a split
        code, out, _ = run(capsys, "generate", "--mechanism", "aes128-ctr",
                           "--bytes", "65544", "--seed-hex", SEED)
        assert code == 0
        assert len(out.strip()) == 2 * 65544

    def test_unknown_mechanism_rejected(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["generate", "--mechanism", "rot13", "--bytes", "8"])
        assert exc.value.code != 0
        assert "rot13" in capsys.readouterr().err

    def test_malformed_seed_hex(self, capsys):
        code, _, err = run(capsys, "generate", "--mechanism", "ascon-ctr",
                           "--bytes", "8", "--seed-hex", "zz")
        assert code == 1
        assert "seed-hex" in err

    def test_script_exhaustion(self, capsys):
        code, _, err = run(capsys, "generate", "--mechanism", "ascon-ctr",
                           "--bytes", "8", "--seed-hex", "aa")
        assert code == 1
        assert "exhausted" in err

    def test_nonpositive_bytes(self, capsys):
        code, _, err = run(capsys, "generate", "--mechanism", "ascon-ctr",
                           "--bytes", "0", "--seed-hex", SEED)
        assert code == 1
        assert "positive" in err

    def test_ctr_add_input_over_one_seedlen(self, capsys):
        code, _, err = run(capsys, "generate", "--mechanism", "ascon-ctr",
                           "--bytes", "8", "--seed-hex", SEED,
                           "--add-input-hex", "ab" * 33)
        assert code == 1
        assert "longer than 256" in err


class TestKat:
    def test_full_suite_passes(self, capsys):
        code, out, err = run(capsys, "kat")
        assert code == 0
        assert "0 failed" in out
        assert err == ""

    def test_suite_filter(self, capsys):
        code, out, _ = run(capsys, "kat", "--suite", "drbg")
        assert code == 0
        assert "suite=drbg" in out
        assert "3 passed" in out

    def test_corrupted_vector_fails_and_is_named(self, capsys, monkeypatch):
        from ascondrbg import kat as kat_module

        original = kat_module.vector_text

        def doctored(name):
            text = original(name)
            if name == kat_module.HASH_KAT_FILE:
                text = text.replace("MD = 0B", "MD = 0C", 1)
            return text

        monkeypatch.setattr(kat_module, "vector_text", doctored)
        code, _, err = run(capsys, "kat", "--suite", "ascon")
        assert code == 1
        assert "FAIL ascon-hash256 Count=1" in err


class TestBench:
    def test_report_and_figure_alongside(self, tmp_path, capsys):
        out_file = tmp_path / "report.csv"
        code, out, _ = run(capsys, "bench", "--mechanism", "aes128-ctr",
                           "--mechanism", "sha256-hmac", "--iterations", "2",
                           "--format", "csv", "--out", str(out_file))
        assert code == 0
        text = out_file.read_text()
        assert text.startswith("mechanism,primitive,state_bytes,mean_ms")
        assert (tmp_path / "report.png").exists()
        assert "Reference measurements" in out

    def test_markdown_to_stdout(self, capsys):
        code, out, _ = run(capsys, "bench", "--mechanism", "aes128-ctr",
                           "--iterations", "2")
        assert code == 0
        assert "| mechanism |" in out
        assert "aes128-ctr" in out
