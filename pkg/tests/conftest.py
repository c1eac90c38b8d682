# -*- coding: utf-8 -*-

import logging
import os

import pytest


@pytest.fixture(scope="package", autouse=True)
def quiet_dcppm():
    logger = logging.getLogger("dcppm")
    level = logger.level
    logger.setLevel(logging.ERROR)
    os.environ["DCPPM_NO_AUTO_PBAR"] = "1"
    yield
    logger.setLevel(level)
