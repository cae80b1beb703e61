import logging
import sys
import unittest

from dyck_tools.logger import custom_logger, set_level
from dyck_tools.logger.logger import FORMAT_STRING


class LoggerTest(unittest.TestCase):

    def test_single_handler(self):
        """Asking twice does not stack handlers"""
        first = custom_logger('dyck_tools.logger_test')
        second = custom_logger('dyck_tools.logger_test')
        self.assertTrue(first is second)
        self.assertEqual(len(second.handlers), 1)
        self.assertEqual(second.handlers[0].formatter._fmt, FORMAT_STRING)

    def test_stderr(self):
        """stdout is left to the cli"""
        handler = custom_logger('dyck_tools.logger_test').handlers[0]
        self.assertTrue(handler.stream is sys.stderr)

    def test_set_level(self):
        """Levels by name reach every package logger"""
        log = custom_logger('dyck_tools.logger_test.level')
        self.assertEqual(set_level('debug'), logging.DEBUG)
        self.assertEqual(log.level, logging.DEBUG)
        set_level('WARNING')
        self.assertEqual(log.level, logging.WARNING)
        self.assertRaises(ValueError, set_level, 'chatty')


if __name__ == '__main__':
    unittest.main()
