import pytest

from tipminer import MiningConfig, prepare_working_dataset

import worked_example as wx


@pytest.fixture(scope="session")
def table1():
    """The reference dataset in original orientation."""
    return wx.original_dataset()


@pytest.fixture(scope="session")
def working(table1):
    """The reversed, target-filtered, truncated working dataset."""
    return prepare_working_dataset(table1, wx.TARGET)


@pytest.fixture(scope="session")
def config():
    return MiningConfig(min_supp=wx.MIN_SUPP, target=wx.TARGET)
