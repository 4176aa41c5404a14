import time

class Timer:
    r'''
    Log how long a block takes.

    Parameters
    ----------
        log: callable
            Where to send the messages, like ``logger.info``.
        message: str
            Logged on entry, and on exit unless ``stop_message`` is given.
        stop_message: str
            Logged on exit instead of ``message``.
        clock: callable
            A source of subtractable times; ``time.perf_counter`` by default.
        per: int
            When larger than one the exit message also reports the cost of each of ``per`` items.

    The context manager returns the timer, so the duration can be read afterwards.

    >>> with Timer(logger.info, 'Enumerating the square torus', per=len(grid)) as timer:
    >>>     ...
    >>> timer.elapsed()
    '''

    def __init__(self, log, message, stop_message=None, clock=time.perf_counter, per=1):
        self.log = log
        self.clock = clock
        self.per = per
        self.start_message = message
        self.stop_message = stop_message or message
        self.started = None
        self.stopped = None

    def start(self):
        self.started = self.clock()

    def stop(self):
        self.stopped = self.clock()

    def elapsed(self):
        r'''
        Seconds between :func:`start` and :func:`stop`; 0 if never started.
        A running timer reports the time so far.
        '''
        if self.started is None:
            return 0.
        end = self.stopped if self.stopped is not None else self.clock()
        return end - self.started

    def __enter__(self):
        self.log(f'{self.start_message} ...')
        self.start()
        return self

    def __exit__(self, exc_type, exc_value, traceback):
        self.stop()
        seconds = self.elapsed()
        each = f' ({seconds / self.per:.6f} seconds each of {self.per})' if self.per > 1 else ''
        self.log(f'... {self.stop_message} [{seconds:.6f} seconds]{each}')
