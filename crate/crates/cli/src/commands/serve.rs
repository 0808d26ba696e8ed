use std::io::{BufRead, BufReader, BufWriter, ErrorKind, Write};
use std::net::{TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use urlsift_core::bundle::{load_bundle, ModelBundle};
use urlsift_core::{Error, Result};

use crate::args::ServeArgs;

static SHUTDOWN: AtomicBool = AtomicBool::new(false);

extern "C" fn request_shutdown(_signal: libc::c_int) {
    SHUTDOWN.store(true, Ordering::SeqCst);
}

/// Line protocol: one URL per request line, one `<label>\t<prob>` response
/// line, `ERROR\t<reason>` for malformed requests. Responses on a connection
/// are in request order. The bundle is shared read-only across connections.
pub fn run(args: &ServeArgs) -> Result<()> {
    let bundle = Arc::new(load_bundle(&args.bundle)?);
    let listener = TcpListener::bind(&args.listen).map_err(|e| Error::io(&args.listen, e))?;
    let local = listener
        .local_addr()
        .map_err(|e| Error::io(&args.listen, e))?;
    println!("listening on {local}");
    std::io::stdout().flush().ok();

    unsafe {
        libc::signal(
            libc::SIGINT,
            request_shutdown as *const () as libc::sighandler_t,
        );
        libc::signal(
            libc::SIGTERM,
            request_shutdown as *const () as libc::sighandler_t,
        );
    }

    listener
        .set_nonblocking(true)
        .map_err(|e| Error::io(&args.listen, e))?;
    let mut connections: Vec<thread::JoinHandle<()>> = Vec::new();
    while !SHUTDOWN.load(Ordering::SeqCst) {
        match listener.accept() {
            Ok((stream, _peer)) => {
                let shared = Arc::clone(&bundle);
                connections.push(thread::spawn(move || handle_connection(stream, shared)));
            }
            Err(e) if e.kind() == ErrorKind::WouldBlock => {
                thread::sleep(Duration::from_millis(25));
            }
            Err(e) => return Err(Error::io(&args.listen, e)),
        }
        connections.retain(|handle| !handle.is_finished());
    }

    // stop accepting, let in-flight connections drain
    for handle in connections {
        let _ = handle.join();
    }
    println!("shutdown complete");
    Ok(())
}

fn respond(bundle: &ModelBundle, raw_line: &[u8]) -> String {
    let line = match std::str::from_utf8(raw_line) {
        Ok(text) => text.trim_end_matches(['\r', '\n']),
        Err(_) => return "ERROR\tinvalid-utf8".to_string(),
    };
    if line.trim().is_empty() {
        return "ERROR\tempty-url".to_string();
    }
    match bundle.classify(line) {
        Ok(prediction) => format!("{}\t{:.4}", prediction.label, prediction.confidence()),
        Err(_) => "ERROR\tunclassifiable".to_string(),
    }
}

fn handle_connection(stream: TcpStream, bundle: Arc<ModelBundle>) {
    // short read timeout so the loop can observe a shutdown request
    stream
        .set_read_timeout(Some(Duration::from_millis(200)))
        .ok();
    let Ok(write_half) = stream.try_clone() else {
        return;
    };
    let mut reader = BufReader::new(stream);
    let mut writer = BufWriter::new(write_half);
    let mut buf: Vec<u8> = Vec::new();

    loop {
        match reader.read_until(b'\n', &mut buf) {
            Ok(0) => {
                if !buf.is_empty() {
                    let response = respond(&bundle, &buf);
                    let _ = writeln!(writer, "{response}");
                    let _ = writer.flush();
                }
                break;
            }
            Ok(_) => {
                let response = respond(&bundle, &buf);
                buf.clear();
                if writeln!(writer, "{response}").is_err() || writer.flush().is_err() {
                    break;
                }
            }
            Err(e) if e.kind() == ErrorKind::WouldBlock || e.kind() == ErrorKind::TimedOut => {
                // partial bytes stay buffered in `buf` for the next read
                if SHUTDOWN.load(Ordering::SeqCst) {
                    break;
                }
            }
            Err(_) => break,
        }
    }
}
