import pytest
from pydantic import ValidationError

from weylmod.config import Settings


def test_defaults():
    settings = Settings(_env_file=None)
    assert settings.bfs_node_cap == 1_000_000
    assert settings.choice_rule == "smallest"
    assert settings.search_limit == 100_000
    assert settings.oracle_primes == [2, 3]
    assert settings.effective_log_level() == "WARNING"


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("WEYLMOD_BFS_NODE_CAP", "500")
    monkeypatch.setenv("weylmod_choice_rule", "LARGEST")
    monkeypatch.setenv("WEYLMOD_ORACLE_PRIMES", "[5, 3, 5]")
    settings = Settings(_env_file=None)
    assert settings.bfs_node_cap == 500
    assert settings.choice_rule == "largest"
    assert settings.oracle_primes == [3, 5]


def test_env_file(tmp_path):
    env_file = tmp_path / ".env"
    env_file.write_text("WEYLMOD_DEBUG=true\nWEYLMOD_LOG_LEVEL=info\n")
    settings = Settings(_env_file=env_file)
    assert settings.log_level == "INFO"
    assert settings.effective_log_level() == "DEBUG"


@pytest.mark.parametrize(
    ("field", "value"),
    [
        ("choice_rule", "random"),
        ("log_level", "loud"),
        ("oracle_primes", [4]),
        ("oracle_primes", []),
        ("bfs_node_cap", 0),
        ("search_limit", 0),
    ],
)
def test_invalid_values(field, value):
    with pytest.raises(ValidationError):
        Settings(_env_file=None, **{field: value})


def test_assignment_is_validated():
    settings = Settings(_env_file=None)
    with pytest.raises(ValidationError):
        settings.oracle_hom_cap = 50
