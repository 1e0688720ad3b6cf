package com.example.core;

import com.example.core.Task;

public class Scheduler {
    public void submit(Task task) {
        /* class Bogus inside a block comment */
        task.label();
    }
}
