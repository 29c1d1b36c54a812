# wildquotient - Verification Toolkit for Wild Quotient Surface Singularities
#
# Copyright (C) 2026 wildquotient contributors
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

import argparse
import json
import logging
import unittest.mock

import pytest

import wildquotient._cli
import wildquotient.report
from wildquotient.exceptions import StructureViolationError

# pylint: disable=protected-access


@pytest.mark.parametrize(
    ("value", "q_list"), (("2", [2]), ("2,3,9", [2, 3, 9]), ("4, 5,", [4, 5]))
)
def test__q_list(value, q_list):
    assert wildquotient._cli._q_list(value) == q_list


def test__q_list_invalid():
    with pytest.raises(argparse.ArgumentTypeError, match=r"comma-separated"):
        wildquotient._cli._q_list("2,x")


def test_verify(capsys, tmp_path):
    json_path = tmp_path.joinpath("report.json")
    with unittest.mock.patch(
        "sys.argv", ["", "verify", "--q", "2", "--fmax", "2", "--json", str(json_path)]
    ):
        wildquotient._cli.main()
    out_lines = capsys.readouterr().out.splitlines()
    assert len(out_lines) == 20
    assert out_lines[0] == "q=2 prop-order" + " " * 25 + "pass observed=8 expected=8"
    assert all(" pass " in line for line in out_lines)
    data = json.loads(json_path.read_text())
    assert [report["q"] for report in data["reports"]] == [2]
    assert data["reports"][0]["overall"] is True


def test_verify_default_q_list():
    report = wildquotient.report.Report(q=0, claims=())
    with unittest.mock.patch("sys.argv", ["", "verify"]), unittest.mock.patch(
        "wildquotient.report.verify", return_value=report
    ) as verify_mock:
        wildquotient._cli.main()
    assert [call.args[0] for call in verify_mock.call_args_list] == [
        2,
        3,
        4,
        5,
        7,
        8,
        9,
    ]
    assert verify_mock.call_args.kwargs == {"fmax": 3, "threads": 1}


@pytest.mark.parametrize(
    ("q_arg", "message"),
    (
        ("6", "6 is not a prime power"),
        ("2,6", "6 is not a prime power"),
        ("11", "q=11 exceeds the supported maximum q=9"),
        ("1", "1 is not a prime power"),
    ),
)
def test_verify_invalid_q(caplog, q_arg, message):
    with unittest.mock.patch(
        "sys.argv", ["", "verify", "--q", q_arg]
    ), unittest.mock.patch("wildquotient.report.verify") as verify_mock:
        with pytest.raises(SystemExit) as exc_info:
            wildquotient._cli.main()
    assert exc_info.value.code == 2
    verify_mock.assert_not_called()
    assert caplog.record_tuples[-1] == ("wildquotient._cli", logging.ERROR, message)


def test_verify_failure(capsys):
    with unittest.mock.patch(
        "sys.argv", ["", "verify", "--q", "2", "--fmax", "2"]
    ), unittest.mock.patch("wildquotient.report.node_count", return_value=3):
        with pytest.raises(SystemExit) as exc_info:
            wildquotient._cli.main()
    assert exc_info.value.code == 1
    assert "thm-two-nodes" in capsys.readouterr().out


def test_verification_error(caplog):
    with unittest.mock.patch(
        "sys.argv", ["", "group", "--q", "3"]
    ), unittest.mock.patch(
        "wildquotient.group.verify_commutator_pairing",
        side_effect=StructureViolationError("[a,a] != e"),
    ):
        with pytest.raises(SystemExit) as exc_info:
            wildquotient._cli.main()
    assert exc_info.value.code == 1
    assert caplog.record_tuples[-1] == (
        "wildquotient._cli",
        logging.ERROR,
        "StructureViolationError: [a,a] != e",
    )


@pytest.mark.parametrize(
    ("args", "root_log_level", "log_format"),
    (
        (["", "invariants", "--q", "2"], logging.INFO, "%(message)s"),
        (
            ["", "--debug", "invariants", "--q", "2"],
            logging.DEBUG,
            "%(asctime)s:%(levelname)s:%(name)s:%(funcName)s:%(message)s",
        ),
        (
            ["", "-d", "hj", "7", "3"],
            logging.DEBUG,
            "%(asctime)s:%(levelname)s:%(name)s:%(funcName)s:%(message)s",
        ),
    ),
)
def test_root_log_level(args, root_log_level, log_format):
    with unittest.mock.patch("sys.argv", args), unittest.mock.patch(
        "logging.basicConfig"
    ) as logging_basic_config_mock:
        wildquotient._cli.main()
    logging_basic_config_mock.assert_called_once()
    assert logging_basic_config_mock.call_args[1]["level"] == root_log_level
    assert logging_basic_config_mock.call_args[1]["format"] == log_format


def test_missing_command():
    with unittest.mock.patch("sys.argv", [""]):
        with pytest.raises(SystemExit) as exc_info:
            wildquotient._cli.main()
    assert exc_info.value.code == 2


def test_no_abbreviations():
    with unittest.mock.patch("sys.argv", ["", "--deb", "invariants", "--q", "2"]):
        with pytest.raises(SystemExit):
            wildquotient._cli.main()
