"""
Tests for runtime settings.
"""
import unittest

import nose2


class TestSettings(unittest.TestCase):

    def test_defaults(self):
        """
        With an empty environment the defaults apply.
        """
        from odengine.settings import DEFAULTS, get_settings

        settings = get_settings(environ={})
        self.assertEqual(dict(settings), DEFAULTS)
        self.assertEqual(settings.max_attrs, 16)
        self.assertEqual(settings['search_depth'], 6)

    def test_layering(self):
        """
        Environment beats defaults, explicit overrides beat both, None
        overrides are ignored.
        """
        from odengine.settings import get_settings

        environ = {'ODENGINE_MAX_ATTRS': ' 6 ', 'ODENGINE_LOG_LEVEL': 'debug'}

        settings = get_settings(environ=environ)
        self.assertEqual(settings.max_attrs, 6)
        self.assertEqual(settings.log_level, 'DEBUG')

        settings = get_settings(environ=environ, max_attrs=4, search_depth=None)
        self.assertEqual(settings.max_attrs, 4)
        self.assertEqual(settings.search_depth, 6)

    def test_blank_variables_ignored(self):
        """
        An empty variable counts as unset.
        """
        from odengine.settings import get_settings

        self.assertEqual(get_settings(environ={'ODENGINE_MAX_ROWS': ''}).max_rows, 5000)

    def test_invalid(self):
        """
        Bad integers, unknown log levels, non-positive limits and unknown
        keys are rejected.
        """
        from odengine.exceptions import OdEngineError, SettingsError
        from odengine.settings import Settings, get_settings

        self.assertRaises(
            SettingsError, lambda: get_settings(environ={'ODENGINE_MAX_ATTRS': 'many'})
        )
        self.assertRaises(
            SettingsError, lambda: get_settings(environ={'ODENGINE_SEARCH_DEPTH': '0'})
        )
        self.assertRaises(
            SettingsError, lambda: get_settings(environ={'ODENGINE_LOG_LEVEL': 'loud'})
        )
        self.assertRaises(SettingsError, lambda: get_settings(environ={}, colour='red'))
        self.assertRaises(SettingsError, lambda: Settings({'max_rows': -1}))
        self.assertTrue(issubclass(SettingsError, OdEngineError))
        self.assertTrue(issubclass(SettingsError, ValueError))

        try:
            get_settings(environ={'ODENGINE_MAX_ATTRS': 'many'})
        except SettingsError as error:
            self.assertIn('ODENGINE_MAX_ATTRS must be an integer', str(error))

        try:
            get_settings(environ={'ODENGINE_LOG_LEVEL': 'loud'})
        except SettingsError as error:
            self.assertIn('ODENGINE_LOG_LEVEL must be one of', str(error))
            self.assertNotIn('integer', str(error))

    def test_read_only(self):
        """
        Settings cannot be assigned to.
        """
        from odengine.settings import get_settings

        settings = get_settings(environ={})

        def assign():
            """
            Assign to a setting.
            """
            settings.max_attrs = 3

        self.assertRaises(TypeError, assign)
        self.assertEqual((settings + {'max_attrs': 3}).max_attrs, 3)
        self.assertEqual(settings.max_attrs, 16)


if __name__ == '__main__':
    nose2.main()
