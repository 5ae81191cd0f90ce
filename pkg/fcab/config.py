# Copyright (c) 2021 The fcab developers.
#
# Licensed under the EUROPEAN UNION PUBLIC LICENCE v. 1.2
#
# SPDX-License-Identifier: EUPL-1.2
#
import configparser
import os

from pathlib import Path

BASE_DIR = Path(__file__).resolve().parent.parent
CONFIG_FILE_NAME = "fcab.conf"
CONFIG_FILE_PATH = os.environ.get("FCAB_CONFIG", str(BASE_DIR) + '/' + CONFIG_FILE_NAME)

DEFAULTS = {
    'logging': {
        'level': 'info',
        'datefmt': '%m/%d/%Y %I:%M:%S %p',
    },
    'numerics': {
        'threshold_resolution': '1000000',
        'quadrature_nodes': '10000',
        'quadrature_budget': '100000',
        'lipschitz_full_pairs': '2000',
        'lipschitz_random_pairs': '1000000',
        'validation_seed': '20210607',
    },
    'experiments': {
        'threads': '1',
        'float_digits': '17',
    },
}

# pylint: disable=too-many-ancestors, too-few-public-methods
class Settings(configparser.ConfigParser):
    class SettingSection:
        def __init__(self, section: dict):
            self._section: dict = section

        def __getattr__(self, name):
            try:
                return self._section[name]
            except KeyError as key_error:
                raise AttributeError("Setting {} not found".format(name)) from key_error

    def __getattr__(self, name):
        if name in self._defaults:
            return self._defaults[name]
        if name in self._sections:
            return self.SettingSection(self._sections[name])
        raise AttributeError("Attribute {} not found".format(name))

settings = Settings(interpolation=None)
settings.read_dict(DEFAULTS)

if os.path.isfile(CONFIG_FILE_PATH):
    with open(CONFIG_FILE_PATH) as conf_file:
        settings.read_file(conf_file)
