"""Configuration parsing, defaults and override precedence."""

import pytest

from consonoscope import (
    ConfigError,
    ModelConfig,
    RunConfig,
    WeightingMode,
    apply_overrides,
    load_config,
    parse_config_text,
)
from consonoscope.config import OUT_DIR_ENV_VAR, parse_formats
from consonoscope.temperament import ScaleKind


class TestDefaults:
    def test_model_defaults(self):
        cfg = ModelConfig()
        assert cfg.max_partials == 50
        assert cfg.decay_rate == 0.08
        assert cfg.f_c == 10.0
        assert cfg.f_d == 60.0
        assert cfg.hearing_min == 20.0
        assert cfg.hearing_max == 20000.0
        assert cfg.consonance_threshold == 5.0
        assert cfg.dissonance_threshold == 4.0
        assert cfg.weighting_mode is WeightingMode.PROXIMITY

    def test_empty_file_is_all_defaults(self):
        run = parse_config_text("")
        assert run.model == ModelConfig()
        assert run.base_frequency == 261.6256
        assert run.formats == ("csv", "json", "dot", "svg")

    def test_model_invariants(self):
        with pytest.raises(ConfigError):
            ModelConfig(max_partials=0)
        with pytest.raises(ConfigError):
            ModelConfig(decay_rate=0.0)
        with pytest.raises(ConfigError):
            ModelConfig(f_c=0.0)
        with pytest.raises(ConfigError):
            ModelConfig(hearing_min=100.0, hearing_max=50.0)


class TestParsing:
    def test_full_file(self):
        run = parse_config_text(
            """
            # comment line
            partials = 30
            decay = 0.1
            fc = 12
            fd = 80          # trailing comment
            cons_threshold = 2.5
            diss_threshold = 1.5
            mode = literal
            base_freq = 440
            scale = just-major
            out = results
            format = csv,json
            """
        )
        assert run.model.max_partials == 30
        assert run.model.decay_rate == 0.1
        assert run.model.f_c == 12.0
        assert run.model.f_d == 80.0
        assert run.model.consonance_threshold == 2.5
        assert run.model.dissonance_threshold == 1.5
        assert run.model.weighting_mode is WeightingMode.LITERAL
        assert run.base_frequency == 440.0
        assert run.scale_kind is ScaleKind.JUST_MAJOR
        assert run.out_dir == "results"
        assert run.formats == ("csv", "json")

    def test_unknown_key_rejected_by_name(self):
        with pytest.raises(ConfigError, match="tempo"):
            parse_config_text("tempo = 120")

    def test_fd_not_above_fc_rejected_by_key(self):
        with pytest.raises(ConfigError, match="fd"):
            parse_config_text("fc = 50\nfd = 40")

    def test_invalid_number_rejected(self):
        with pytest.raises(ConfigError, match="decay"):
            parse_config_text("decay = fast")

    def test_invalid_mode_rejected(self):
        with pytest.raises(ConfigError, match="mode"):
            parse_config_text("mode = quadratic")

    def test_missing_equals_rejected_with_location(self):
        with pytest.raises(ConfigError, match=":2"):
            parse_config_text("partials = 10\njust a bare line")

    def test_unknown_format_rejected(self):
        with pytest.raises(ConfigError, match="format"):
            parse_config_text("format = csv,pdf")

    def test_unknown_scale_rejected(self):
        with pytest.raises(ConfigError, match="scale"):
            parse_config_text("scale = bohlen-pierce")

    def test_scale_accepts_underscore_alias(self):
        run = parse_config_text("scale = mean_tone")
        assert run.scale_kind is ScaleKind.MEAN_TONE

    def test_load_config_reads_file(self, tmp_path):
        path = tmp_path / "run.conf"
        path.write_text("partials = 7\n")
        assert load_config(path).model.max_partials == 7

    def test_parse_formats_keeps_order(self):
        assert parse_formats("svg, csv") == ("svg", "csv")
        with pytest.raises(ConfigError):
            parse_formats("")


class TestOverrides:
    def test_flag_beats_file(self):
        base = parse_config_text("decay = 0.1")
        run = apply_overrides(base, decay_rate=0.05)
        assert run.model.decay_rate == 0.05

    def test_none_values_keep_file_settings(self):
        base = parse_config_text("decay = 0.1\nbase_freq = 392")
        run = apply_overrides(base, decay_rate=None, base_frequency=None)
        assert run.model.decay_rate == 0.1
        assert run.base_frequency == 392.0

    def test_unknown_override_rejected(self):
        with pytest.raises(ConfigError, match="volume"):
            apply_overrides(RunConfig(), volume=11)

    def test_override_validation_still_applies(self):
        with pytest.raises(ConfigError, match="fd"):
            apply_overrides(RunConfig(), f_c=70.0)  # collides with default f_d=60


class TestRunConfig:
    def test_out_dir_environment_fallback(self, monkeypatch):
        monkeypatch.delenv(OUT_DIR_ENV_VAR, raising=False)
        assert RunConfig().resolve_out_dir() == "out"
        monkeypatch.setenv(OUT_DIR_ENV_VAR, "/tmp/elsewhere")
        assert RunConfig().resolve_out_dir() == "/tmp/elsewhere"
        assert RunConfig(out_dir="explicit").resolve_out_dir() == "explicit"

    def test_requires_a_format(self):
        with pytest.raises(ConfigError):
            RunConfig(formats=())

    def test_rejects_nonpositive_base(self):
        with pytest.raises(ConfigError):
            RunConfig(base_frequency=0.0)
