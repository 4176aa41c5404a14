#!/usr/bin/env python

from itertools import count

from spectral_sumrules.performance import Timer

def test_timer_logs_and_measures():
    messages = []
    ticks = count(0, 2)
    with Timer(messages.append, 'Enumerating', clock=lambda: next(ticks), per=4) as timer:
        pass
    assert timer.elapsed() == 2
    assert messages[0] == 'Enumerating ...'
    assert messages[1].startswith('... Enumerating [2.000000 seconds]')
    assert '0.500000 seconds each of 4' in messages[1]

def test_unstarted_timer():
    assert Timer(print, 'never').elapsed() == 0.
