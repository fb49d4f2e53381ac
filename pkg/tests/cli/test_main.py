import logging

import pytest

from weylmod import main as main_module
from weylmod.main import WeylModApplication


def test_run_prints_command_output(settings, capsys):
    code = WeylModApplication(settings).run(["rho", "exweyl", "--word", "1 1"])
    assert code == 0
    assert capsys.readouterr().out == "(0,1) (1,1)\n"


@pytest.mark.parametrize(
    ("argv", "level"),
    [
        (["--debug", "rho", "a2", "--word", "1"], "DEBUG"),
        (["--log-level", "info", "rho", "a2", "--word", "1"], "INFO"),
        (["rho", "a2", "--word", "1"], "WARNING"),
    ],
)
def test_log_level_switches(settings, argv, level):
    assert WeylModApplication(settings)._log_level(argv) == level


def test_logging_goes_to_stderr(settings, mocker):
    basic_config = mocker.patch.object(logging, "basicConfig")
    WeylModApplication(settings).run(["--debug", "coxmat", "a2"])
    assert basic_config.call_args.kwargs["level"] == logging.DEBUG
    assert basic_config.call_args.kwargs["stream"] is main_module.sys.stderr


def test_main_exits_with_the_command_code(mocker, capsys):
    mocker.patch.object(main_module.sys, "argv", ["weylmod", "prefix", "exweyl", "--word", "3 2 3"])
    with pytest.raises(SystemExit) as info:
        main_module.main()
    assert info.value.code == 1
    assert capsys.readouterr().out == "false\n"
