import sys
from packaging import version
import nox.sessions


nox.options.reuse_existing_virtualenvs = True
nox.options.sessions = ['tests', 'tests_pydantic', 'tests_numpy']


@nox.session(python=['3.8', '3.9', '3.10', '3.11'])
def tests(session: nox.sessions.Session, numpy=None, pydantic=None):
    """ Run all tests """
    session.install('poetry')
    session.run('poetry', 'install')

    # Specific versions
    if numpy:
        session.install(f'numpy=={numpy}')
    if pydantic:
        session.install(f'pydantic=={pydantic}')

    # Test
    session.run('pytest', '-vv', 'tests/', '--cov=msirs', *session.posargs)


@nox.session()
@nox.parametrize(
    'pydantic',
    [
        '1.10.2',
        '1.10.9',
        '1.10.13',
    ]
)
def tests_pydantic(session, pydantic):
    tests(session, pydantic=pydantic)


@nox.session()
@nox.parametrize(
    'numpy',
    [
        '1.21.6',
        '1.24.4',
        '1.26.4',
    ]
)
def tests_numpy(session, numpy):
    # numpy < 1.23 has no wheels for Python 3.11
    if sys.version_info >= (3, 11, 0) and version.parse(numpy) < version.parse('1.23'):
        return

    tests(session, numpy=numpy)


@nox.session()
def tests_fast(session):
    """ Skip the full-size acceptance runs """
    session.install('poetry')
    session.run('poetry', 'install')
    session.run('pytest', '-vv', 'tests/', '-m', 'not slow')
